#include <algorithm>
#include <map>
#include <set>
#include <tuple>

#include "credal/net.hpp"

namespace credal {

bool IrrelevanceReport::passed() const
{
    return std::all_of(cases.begin(), cases.end(), [](const IrrelevanceCase& c) { return c.agrees(); });
}

IrrelevanceReport check_irrelevance(const JointModel& jm, const NodeId& node, const Scope& irrelevant,
                                    const Configuration& observed, const std::vector<Gamble>& gambles)
{
    const CredalNet& net = jm.net();
    const Scope candidates = net.dag().non_parent_non_descendants(node);
    if (!candidates.includes(irrelevant)) {
        throw ScopeError(to_string(irrelevant) + " is not a subset of the non-parent non-descendants "
                         + to_string(candidates) + " of '" + node + "'");
    }
    const Scope parents = net.dag().parents(node);
    if (!(observed.scope() == unite(parents, irrelevant))) {
        throw ScopeError("observation " + to_string(observed) + " must fix exactly "
                         + to_string(unite(parents, irrelevant)));
    }
    const LocalModel& local = net.local(node);
    const AssessmentCone& cone = local.given(observed.restrict(parents));

    IrrelevanceReport report;
    report.node = node;
    report.irrelevant = irrelevant;
    report.observed = observed;
    for (const auto& f : gambles) {
        Gamble h = cylindrical_extend(f, local.node_space);
        IrrelevanceCase c{h, marginal_member(jm, Scope{node}, observed, h), member(cone, h)};
        report.cases.push_back(std::move(c));
    }
    return report;
}

std::vector<Scope> irrelevant_subsets(const Scope& candidates, const VerifyOptions& options,
                                      Sampler& sampler)
{
    const auto& ids = candidates.ids();
    std::vector<Scope> out;
    if (ids.size() <= options.exhaustive_limit) {
        const std::size_t count = std::size_t{1} << ids.size();
        for (std::size_t mask = 0; mask < count; ++mask) {
            std::vector<NodeId> pick;
            for (std::size_t i = 0; i < ids.size(); ++i) {
                if (mask >> i & 1) pick.push_back(ids[i]);
            }
            out.emplace_back(std::move(pick));
        }
        return out;
    }
    // The empty subset (local model itself) plus distinct random non-empty ones.
    out.emplace_back();
    std::set<std::vector<NodeId>> seen;
    std::size_t attempts = 0;
    while (seen.size() < options.sampled_subsets && attempts++ < 64 * options.sampled_subsets) {
        std::vector<NodeId> pick;
        for (const auto& id : ids) {
            if (sampler.uniform(0, 1)) pick.push_back(id);
        }
        if (pick.empty() || !seen.insert(pick).second) continue;
        out.emplace_back(std::move(pick));
    }
    return out;
}

namespace {

void sweep_irrelevance(const JointModel& jm, const VerifyOptions& options, Sampler& sampler,
                       VerificationReport& report)
{
    const CredalNet& net = jm.net();
    for (const auto& local : net.locals()) {
        const NodeId& s = local.node;
        const auto subsets = irrelevant_subsets(net.dag().non_parent_non_descendants(s), options, sampler);

        for (std::size_t xp = 0; xp < local.parent_space.size(); ++xp) {
            const Configuration parent_config(local.parent_space, xp);
            const AssessmentCone& cone = local.cones[xp];

            std::vector<Gamble> probes;
            for (const auto& g : cone.assessment()) {
                probes.push_back(g);
                probes.push_back(-g);
            }
            for (std::size_t i = 0; i < options.budget; ++i) {
                probes.push_back(sampler.nonzero_gamble(local.node_space));
            }

            for (const auto& subset : subsets) {
                const Space irrelevant_space = net.space_of(subset);
                for (std::size_t xi = 0; xi < irrelevant_space.size(); ++xi) {
                    Configuration observed = parent_config.merge(Configuration(irrelevant_space, xi));
                    auto result = check_irrelevance(jm, s, subset, observed, probes);
                    std::size_t& counter = subset.empty() ? report.local_checks : report.irrelevance_checks;
                    counter += result.cases.size();
                    for (const auto& c : result.cases) {
                        if (c.agrees()) continue;
                        Violation v;
                        v.requirement = subset.empty() ? "G1" : "G2";
                        v.node = s;
                        v.observed = observed;
                        v.irrelevant = subset;
                        v.gamble = c.gamble;
                        v.joint = c.joint;
                        v.local = c.local;
                        v.detail = c.joint ? "joint accepts a gamble the local model rejects"
                                           : "joint rejects a gamble the local model accepts";
                        report.violations.push_back(std::move(v));
                    }
                }
            }
        }
    }
}

void sweep_coherence(const JointModel& jm, const VerifyOptions& options, Sampler& sampler,
                     VerificationReport& report)
{
    const Space& full = jm.space();
    auto flag = [&](std::string detail, std::optional<Gamble> f, bool joint) {
        Violation v;
        v.requirement = "G3";
        v.gamble = std::move(f);
        v.joint = joint;
        v.detail = std::move(detail);
        report.violations.push_back(std::move(v));
    };

    ++report.coherence_checks;
    if (lp::contains_zero(jm.rays())) {
        flag("a positive combination of generators vanishes", std::nullopt, true);
    }
    for (std::size_t x = 0; x < full.size(); ++x) {
        Gamble ind = indicator(Configuration(full, x), full);
        report.coherence_checks += 2;
        if (!joint_member(jm, ind)) flag("positive indicator is not desirable", ind, false);
        if (joint_member(jm, -ind)) flag("negative indicator is desirable", -ind, true);
    }
    for (std::size_t i = 0; i < options.budget; ++i) {
        Gamble neg = sampler.nonpositive_gamble(full);
        Gamble pos = sampler.positive_gamble(full);
        report.coherence_checks += 2;
        if (joint_member(jm, neg)) flag("nonpositive gamble is desirable", neg, true);
        if (!joint_member(jm, pos)) flag("positive gamble is not desirable", pos, false);
    }
}

// Every generator must factor as I_{x_{P(s) u N(s)}} h with h in the
// local model D_{s | x_{P(s)}}; this is what places it inside every joint
// satisfying G1 and G2.
void certify_generators(const JointModel& jm, VerificationReport& report)
{
    const CredalNet& net = jm.net();
    const Space& full = jm.space();
    std::map<std::tuple<NodeId, std::size_t, RationalVector>, bool> cache;

    for (std::size_t k = 0; k < jm.size(); ++k) {
        ++report.structural_checks;
        const GeneratorOrigin& o = jm.origins()[k];
        const LocalModel& local = net.local(o.node);
        const Space context_space = net.space_of(net.dag().non_parent_non_descendants(o.node));
        const Configuration parent_config(local.parent_space, o.parent_index);
        const Configuration slice = parent_config.merge(Configuration(context_space, o.context_index));
        const RationalVector& ray = jm.rays()[k];

        // Read h off the slice, then demand ray == I_slice * h exactly.
        RationalVector h(local.node_space.size());
        std::vector<char> seen(h.size(), 0);
        bool factors = true;
        const auto to_node = full.projection_table(local.node_space);
        const auto to_slice = full.projection_table(slice.space());
        const std::size_t slice_index = slice.index();
        for (std::size_t x = 0; x < full.size() && factors; ++x) {
            if (to_slice[x] != slice_index) {
                factors = sgn(ray[x]) == 0;
                continue;
            }
            std::size_t xs = to_node[x];
            if (!seen[xs]) {
                h[xs] = ray[x];
                seen[xs] = 1;
            } else {
                factors = h[xs] == ray[x];
            }
        }

        Violation v;
        v.requirement = "G4";
        v.node = o.node;
        v.observed = slice;
        if (!factors) {
            v.detail = "generator " + std::to_string(k) + " is not an indicator times a gamble on X_" + o.node;
            report.violations.push_back(std::move(v));
            continue;
        }
        auto key = std::make_tuple(o.node, o.parent_index, h);
        auto it = cache.find(key);
        if (it == cache.end()) {
            Gamble hg(local.node_space, h);
            bool ok = !hg.is_zero() && member(local.cones[o.parent_index], hg);
            it = cache.emplace(std::move(key), ok).first;
        }
        if (!it->second) {
            v.gamble = Gamble(local.node_space, h);
            v.local = false;
            v.detail = "generator " + std::to_string(k) + " has a local factor outside the local model";
            report.violations.push_back(std::move(v));
        }
    }
}

}  // namespace

VerificationReport verify_requirements(const JointModel& jm, const VerifyOptions& options)
{
    VerificationReport report;
    report.seed = options.seed;
    report.budget = options.budget;
    report.generators = jm.size();
    Sampler sampler(options.seed);
    sweep_irrelevance(jm, options, sampler, report);
    sweep_coherence(jm, options, sampler, report);
    certify_generators(jm, report);
    return report;
}

}  // namespace credal
