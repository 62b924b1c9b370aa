// Acceptance suite. Every criterion is checked exactly over rationals and
// reported on one line; the exit status is nonzero if any criterion fails.

#include <chrono>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "credal/commands.hpp"
#include "credal/cone.hpp"
#include "credal/io.hpp"
#include "credal/net.hpp"
#include "credal/oracle.hpp"
#include "support/random_nets.hpp"

using namespace credal;
using credal::testing::random_net;
using credal::testing::RandomNet;

namespace {

struct Outcome
{
    bool passed = true;
    std::string detail;
};

struct Criterion
{
    int number;
    std::string name;
    double limit_seconds;
    std::function<Outcome()> run;
};

Space single_variable(std::size_t size)
{
    VariableSpace v{"x", {}};
    for (std::size_t i = 0; i < size; ++i) v.values.push_back("x" + std::to_string(i));
    return Space({v});
}

Space random_small_space(Sampler& sampler)
{
    // 2, 3, 4 values on one variable, or a 2x2 product
    const auto pick = sampler.uniform(0, 3);
    if (pick < 3) return single_variable(static_cast<std::size_t>(pick + 2));
    return Space({VariableSpace{"u", {"u0", "u1"}}, VariableSpace{"v", {"v0", "v1"}}});
}

Gamble small_coefficient_gamble(Sampler& sampler, const Space& space)
{
    for (;;) {
        RationalVector t(space.size());
        for (auto& v : t) v = sampler.rational(3, 4);
        Gamble g(space, std::move(t));
        if (!g.is_zero()) return g;
    }
}

// 0 in posi(rays) decided by elimination: lambda >= 0 with sum lambda = 1
// and sum lambda_k ray_k = 0.
bool fm_contains_zero(const lp::Rays& rays)
{
    if (rays.empty()) return false;
    lp::Rays lifted;
    for (const auto& r : rays) {
        RationalVector v = r;
        v.push_back(1);
        lifted.push_back(std::move(v));
    }
    RationalVector target(rays.front().size(), 0);
    target.push_back(1);
    return oracle::fm_membership(target, lifted);
}

Rational expectation_of(const RationalVector& p, const Gamble& g)
{
    Rational e = 0;
    for (std::size_t x = 0; x < g.size(); ++x) e += p[x] * g[x];
    return e;
}

bool witness_checks(const AssessmentCone& cone, const CoherenceReport& r)
{
    if (r.witness.size() != cone.space().size()) return false;
    Rational total = 0;
    for (const auto& v : r.witness) {
        if (sgn(v) <= 0) return false;
        total += v;
    }
    if (total != 1) return false;
    for (const auto& g : cone.assessment()) {
        if (sgn(expectation_of(r.witness, g)) <= 0) return false;
    }
    return true;
}

bool certificate_checks(const AssessmentCone& cone, const CoherenceReport& r)
{
    const auto& a = cone.assessment();
    if (r.assessment_weights.size() != a.size() || r.indicator_weights.size() != cone.space().size()) {
        return false;
    }
    bool any = false;
    RationalVector sum(cone.space().size(), 0);
    for (std::size_t k = 0; k < a.size(); ++k) {
        if (sgn(r.assessment_weights[k]) < 0) return false;
        any |= sgn(r.assessment_weights[k]) > 0;
        for (std::size_t x = 0; x < sum.size(); ++x) sum[x] += r.assessment_weights[k] * a[k][x];
    }
    for (std::size_t x = 0; x < sum.size(); ++x) {
        if (sgn(r.indicator_weights[x]) < 0) return false;
        any |= sgn(r.indicator_weights[x]) > 0;
        sum[x] += r.indicator_weights[x];
    }
    if (!any) return false;
    for (const auto& v : sum) {
        if (sgn(v) != 0) return false;
    }
    return true;
}

Outcome coherence_witness()
{
    Sampler sampler(1001);
    std::size_t coherent = 0;
    std::size_t incoherent = 0;
    std::size_t mismatches = 0;
    for (int trial = 0; trial < 500; ++trial) {
        Space space = random_small_space(sampler);
        std::vector<Gamble> gambles;
        const auto count = sampler.uniform(0, 4);
        for (std::int64_t k = 0; k < count; ++k) gambles.push_back(small_coefficient_gamble(sampler, space));
        AssessmentCone cone(space, gambles);
        CoherenceReport r = is_coherent(cone);
        const bool oracle_incoherent = fm_contains_zero(cone.rays());
        bool ok = r.coherent != oracle_incoherent;
        ok = ok && (r.coherent ? witness_checks(cone, r) : certificate_checks(cone, r));
        mismatches += !ok;
        (r.coherent ? coherent : incoherent) += 1;
    }
    std::ostringstream s;
    s << "500 assessments (" << coherent << " coherent, " << incoherent << " incoherent), " << mismatches
      << " mismatches";
    return {mismatches == 0 && coherent > 0 && incoherent > 0, s.str()};
}

// The shared population for criteria 2 to 4.
std::vector<RandomNet>& population()
{
    static std::vector<RandomNet> nets = [] {
        Sampler sampler(2002);
        std::vector<RandomNet> out;
        for (int i = 0; i < 100; ++i) out.push_back(random_net(sampler));
        return out;
    }();
    return nets;
}

std::vector<JointModel>& joints()
{
    static std::vector<JointModel> out = [] {
        std::vector<JointModel> jms;
        for (const auto& rn : population()) jms.push_back(build_joint(rn.net));
        return jms;
    }();
    return out;
}

Outcome joint_coherence()
{
    Sampler sampler(3003);
    std::size_t failures = 0;
    std::size_t checks = 0;
    for (const auto& jm : joints()) {
        if (jm.size() > kDefaultGeneratorCap) ++failures;
        ++checks;
        if (lp::contains_zero(jm.rays())) ++failures;
        for (int i = 0; i < 20; ++i) {
            ++checks;
            if (joint_member(jm, sampler.nonpositive_gamble(jm.space()))) ++failures;
        }
    }
    std::ostringstream s;
    s << joints().size() << " nets, " << checks << " checks, " << failures << " failures";
    return {failures == 0, s.str()};
}

Outcome positivity_containment()
{
    Sampler sampler(4004);
    std::size_t failures = 0;
    std::size_t checks = 0;
    for (const auto& jm : joints()) {
        for (const auto& x : configurations(jm.space())) {
            ++checks;
            if (!joint_member(jm, indicator(x, jm.space()))) ++failures;
        }
        for (int i = 0; i < 20; ++i) {
            ++checks;
            if (!joint_member(jm, sampler.positive_gamble(jm.space()))) ++failures;
        }
    }
    std::ostringstream s;
    s << joints().size() << " nets, " << checks << " checks, " << failures << " failures";
    return {failures == 0, s.str()};
}

Outcome irrelevance_biconditional()
{
    Sampler sampler(5005);
    std::size_t cases = 0;
    std::size_t violations = 0;
    std::size_t oracle_disagreements = 0;
    for (const auto& jm : joints()) {
        const CredalNet& net = jm.net();
        const Dag& dag = net.dag();
        for (const auto& local : net.locals()) {
            const NodeId& s = local.node;
            const Scope parents = dag.parents(s);
            const Scope n = dag.non_parent_non_descendants(s);
            std::vector<Scope> subsets;
            if (n.size() <= 3) {
                for (std::size_t mask = 0; mask < (std::size_t{1} << n.size()); ++mask) {
                    std::vector<NodeId> ids;
                    for (std::size_t i = 0; i < n.size(); ++i) {
                        if (mask >> i & 1) ids.push_back(n.ids()[i]);
                    }
                    subsets.emplace_back(std::move(ids));
                }
            } else {
                VerifyOptions options;
                subsets = irrelevant_subsets(n, options, sampler);
            }
            for (std::size_t xp = 0; xp < local.cones.size(); ++xp) {
                const AssessmentCone& cone = local.cones[xp];
                const Configuration parent_config(local.parent_space, xp);
                std::vector<Gamble> probes;
                for (const auto& g : cone.assessment()) {
                    probes.push_back(g);
                    probes.push_back(-g);
                }
                for (int i = 0; i < 10; ++i) probes.push_back(sampler.nonzero_gamble(local.node_space));

                std::vector<bool> local_answer;
                for (const auto& f : probes) {
                    const bool lp_side = member(cone, f);
                    const bool fm_side = oracle::fm_membership(f.table(), cone.rays());
                    oracle_disagreements += lp_side != fm_side;
                    local_answer.push_back(fm_side);
                }
                for (const auto& irrelevant : subsets) {
                    for (const auto& xi : configurations(net.space_of(irrelevant))) {
                        const Configuration observed = parent_config.merge(xi);
                        for (std::size_t k = 0; k < probes.size(); ++k) {
                            ++cases;
                            if (marginal_member(jm, Scope{s}, observed, probes[k]) != local_answer[k]) {
                                ++violations;
                            }
                        }
                    }
                }
            }
        }
    }
    std::ostringstream s;
    s << cases << " cases over " << joints().size() << " nets, " << violations << " violations, "
      << oracle_disagreements << " local oracle disagreements";
    return {violations == 0 && oracle_disagreements == 0, s.str()};
}

Outcome oracle_agreement()
{
    Sampler sampler(6006);
    std::size_t members = 0;
    std::size_t disagreements = 0;
    for (int trial = 0; trial < 1000; ++trial) {
        const auto dim = static_cast<std::size_t>(sampler.uniform(1, 6));
        const auto count = static_cast<std::size_t>(sampler.uniform(0, 16));
        lp::Rays rays(count, RationalVector(dim));
        for (auto& r : rays) {
            for (auto& v : r) v = sampler.rational(3, 4);
        }
        RationalVector target(dim, 0);
        // half the targets are built inside the cone, half are arbitrary
        const bool inside = trial % 2 == 0 && count > 0;
        bool zero = true;
        while (zero) {
            for (auto& v : target) v = 0;
            if (inside) {
                for (const auto& r : rays) {
                    if (sampler.uniform(0, 1) == 0) continue;
                    const Rational w = sampler.positive(3, 4);
                    for (std::size_t i = 0; i < dim; ++i) target[i] += w * r[i];
                }
            } else {
                for (auto& v : target) v = sampler.rational(3, 4);
            }
            zero = std::all_of(target.begin(), target.end(), [](const Rational& v) { return sgn(v) == 0; });
            if (zero && inside) {
                // every drawn ray summed to zero; fall back to a random target
                for (auto& v : target) v = sampler.rational(3, 4);
                zero = std::all_of(target.begin(), target.end(), [](const Rational& v) { return sgn(v) == 0; });
            }
        }
        const auto lp_answer = lp::conic_membership(target, rays);
        const bool fm_answer = oracle::fm_membership(target, rays);
        members += fm_answer;
        disagreements += lp_answer.member != fm_answer;
        if (lp_answer.member) {
            RationalVector sum(dim, 0);
            for (std::size_t k = 0; k < count; ++k) {
                for (std::size_t i = 0; i < dim; ++i) sum[i] += lp_answer.coefficients[k] * rays[k][i];
            }
            disagreements += sum != target;
        }
    }
    std::ostringstream s;
    s << "1000 instances (" << members << " members), " << disagreements << " disagreements";
    return {disagreements == 0 && members > 0 && members < 1000, s.str()};
}

Outcome prop3_audit()
{
    Sampler sampler(7007);
    std::size_t failures = 0;
    std::size_t samples = 0;
    for (int i = 0; i < 50; ++i) {
        RandomNet rn = random_net(sampler);
        JointModel jm = build_joint(rn.net);
        auto audit = oracle::positivity_audit(oracle::witness_net(*rn.net), jm, 50, 7007 + i);
        samples += audit.samples;
        failures += audit.failures.size();
    }
    std::ostringstream s;
    s << "50 nets, " << samples << " audited combinations, " << failures << " failures";
    return {failures == 0 && samples == 2500, s.str()};
}

Outcome mutation_sensitivity()
{
    Sampler sampler(8008);
    int mutated = 0;
    int detected = 0;
    int attempts = 0;
    while (mutated < 20 && attempts < 1000) {
        ++attempts;
        RandomNet rn = random_net(sampler);
        std::vector<cli::SignFlip> candidates;
        for (const auto& local : rn.net->locals()) {
            for (std::size_t xp = 0; xp < local.cones.size(); ++xp) {
                for (std::size_t k = 0; k < local.cones[xp].assessment().size(); ++k) {
                    candidates.push_back({local.node, xp, k});
                }
            }
        }
        if (candidates.empty()) continue;
        const auto pick = static_cast<std::size_t>(sampler.uniform(0, static_cast<std::int64_t>(candidates.size()) - 1));
        const cli::SignFlip flip = candidates[pick];
        ++mutated;

        cli::VerifyCommandOptions options;
        options.seed = 80 + static_cast<std::uint64_t>(mutated);
        options.flips = {flip};
        std::ostringstream out;
        std::ostringstream err;
        const int code = cli::verify(io::serialize_network(*rn.net), options, out, err);
        if (code != cli::kVerificationFailed) continue;

        auto report = io::Json::parse(out.str());
        bool named = false;
        for (const auto& v : report["requirements"]["violations"]) {
            named |= v.contains("node") && v.contains("given") && v.contains("irrelevant") && v.contains("gamble")
                     && v["node"] == flip.node;
        }
        detected += named;
    }
    std::ostringstream s;
    s << mutated << " mutated nets, " << detected << " exited 1 naming (s, x, I, f)";
    return {mutated == 20 && detected == 20, s.str()};
}

Outcome determinism()
{
    Sampler sampler(9009);
    int runs = 0;
    int identical = 0;
    for (int i = 0; i < 5; ++i) {
        RandomNet rn = random_net(sampler);
        const io::Json doc = io::serialize_network(*rn.net);
        cli::VerifyCommandOptions options;
        options.seed = 42;
        std::ostringstream out1, err1, out2, err2;
        const int c1 = cli::verify(doc, options, out1, err1);
        const int c2 = cli::verify(doc, options, out2, err2);
        ++runs;
        identical += c1 == c2 && out1.str() == out2.str() && err1.str() == err2.str() && !out1.str().empty();
    }
    std::ostringstream s;
    s << identical << "/" << runs << " repeated verify runs byte-identical";
    return {identical == runs, s.str()};
}

}  // namespace

int main()
{
    const std::vector<Criterion> criteria = {
        {1, "coherence iff witness", 60, coherence_witness},
        {2, "joint coherence", 300, joint_coherence},
        {3, "positivity containment", 300, positivity_containment},
        {4, "irrelevance biconditional", 600, irrelevance_biconditional},
        {5, "oracle agreement", 60, oracle_agreement},
        {6, "positivity audit", 120, prop3_audit},
        {7, "mutation sensitivity", 120, mutation_sensitivity},
        {8, "determinism", 60, determinism},
    };

    int failed = 0;
    for (const auto& c : criteria) {
        const auto start = std::chrono::steady_clock::now();
        Outcome outcome;
        try {
            outcome = c.run();
        } catch (const std::exception& e) {
            outcome = {false, std::string("exception: ") + e.what()};
        }
        const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        const bool in_time = seconds <= c.limit_seconds;
        const bool passed = outcome.passed && in_time;
        failed += !passed;
        std::cout << (passed ? "PASS" : "FAIL") << " criterion " << c.number << " (" << c.name << "): "
                  << outcome.detail << "; " << std::fixed;
        std::cout.precision(1);
        std::cout << seconds << " s of " << c.limit_seconds << " s allowed" << std::endl;
    }
    std::cout << (failed == 0 ? "all criteria passed" : std::to_string(failed) + " criteria failed") << std::endl;
    return failed == 0 ? 0 : 1;
}
