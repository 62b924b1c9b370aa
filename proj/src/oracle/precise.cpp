#include <algorithm>

#include "credal/oracle.hpp"
#include "credal/random.hpp"

namespace credal::oracle {

PreciseNet::PreciseNet(Dag dag, std::vector<VariableSpace> variables,
                       std::map<NodeId, std::vector<RationalVector>> pmfs)
    : dag_(std::move(dag))
    , space_(std::move(variables))
    , pmfs_(std::move(pmfs))
{
    auto check = validate(dag_);
    if (!check.acyclic) throw CycleError(check.cycle);
    if (!(space_.scope() == Scope(dag_.nodes()))) {
        throw ScopeError("variables do not match graph nodes");
    }
    for (const auto& s : dag_.nodes()) {
        const std::size_t parents = space_.restrict(dag_.parents(s)).size();
        const std::size_t values = space_.variable(s).size();
        auto it = pmfs_.find(s);
        if (it == pmfs_.end() || it->second.size() != parents) {
            throw IncompleteModelError("node '" + s + "' needs one pmf per parent configuration");
        }
        for (const auto& p : it->second) {
            if (p.size() != values) throw DimensionError("pmf of '" + s + "' has the wrong length");
            Rational total = 0;
            for (const auto& v : p) {
                if (sgn(v) <= 0) throw Error("pmf of '" + s + "' is not strictly positive");
                total += v;
            }
            if (total != 1) throw Error("pmf of '" + s + "' does not sum to one");
        }
    }
    if (pmfs_.size() != dag_.nodes().size()) {
        throw UnknownNodeError("pmf given for a node outside the graph");
    }

    joint_.assign(space_.size(), 1);
    for (const auto& s : dag_.nodes()) {
        const Space ps = space_.restrict(dag_.parents(s));
        const Space xs = space_.restrict(Scope{s});
        const auto to_parents = space_.projection_table(ps);
        const auto to_node = space_.projection_table(xs);
        const auto& table = pmfs_.at(s);
        for (std::size_t x = 0; x < space_.size(); ++x) {
            joint_[x] *= table[to_parents[x]][to_node[x]];
        }
    }
}

const RationalVector& PreciseNet::pmf(const NodeId& s, std::size_t parent_index) const
{
    auto it = pmfs_.find(s);
    if (it == pmfs_.end()) throw UnknownNodeError("unknown node '" + s + "'");
    return it->second.at(parent_index);
}

Rational PreciseNet::local_expectation(const NodeId& s, const Configuration& parents, const Gamble& h) const
{
    const Space ps = space_.restrict(dag_.parents(s));
    const Space xs = space_.restrict(Scope{s});
    const auto& p = pmf(s, parents.restrict(ps.scope()).index());
    Gamble g = cylindrical_extend(h, xs);
    return lp::dot(p, g.table());
}

Rational PreciseNet::marginal_mass(const Configuration& config) const
{
    const auto to_sub = space_.projection_table(config.space());
    const std::size_t hit = config.index();
    Rational total = 0;
    for (std::size_t x = 0; x < space_.size(); ++x) {
        if (to_sub[x] == hit) total += joint_[x];
    }
    return total;
}

PreciseNet witness_net(const CredalNet& net)
{
    std::map<NodeId, std::vector<RationalVector>> pmfs;
    for (const auto& local : net.locals()) {
        auto& list = pmfs[local.node];
        for (const auto& cone : local.cones) {
            auto report = is_coherent(cone);
            if (!report.coherent) {
                throw IncoherentModelError("local model of '" + local.node + "' has no witness pmf");
            }
            list.push_back(std::move(report.witness));
        }
    }
    return PreciseNet(net.dag(), net.space().variables(), std::move(pmfs));
}

Rational global_mass(const PreciseNet& pn, const Configuration& full)
{
    if (!(full.space() == pn.space())) {
        throw ScopeError("global mass needs a configuration of every node");
    }
    // Product over the local pmfs, recomputed here rather than read from
    // the cached joint table.
    Rational out = 1;
    for (const auto& s : pn.dag().nodes()) {
        Configuration parents = full.restrict(pn.dag().parents(s));
        out *= pn.pmf(s, parents.index())[full.digit(s)];
    }
    return out;
}

Rational expectation(const PreciseNet& pn, const Gamble& f)
{
    Gamble g = cylindrical_extend(f, pn.space());
    return lp::dot(pn.joint(), g.table());
}

PositivityAudit positivity_audit(const PreciseNet& pn, const JointModel& jm, std::size_t samples,
                                 std::uint64_t seed)
{
    if (!(pn.space() == jm.space()) || !(pn.dag() == jm.net().dag())) {
        throw ScopeError("precise net and joint model describe different graphs");
    }
    for (const auto& local : jm.net().locals()) {
        for (std::size_t xp = 0; xp < local.cones.size(); ++xp) {
            const Configuration parents(local.parent_space, xp);
            for (const auto& g : local.cones[xp].assessment()) {
                if (sgn(pn.local_expectation(local.node, parents, g)) <= 0) {
                    throw WitnessMismatchError("local gamble " + to_string(g) + " of '" + local.node
                                               + "' given " + to_string(parents)
                                               + " has nonpositive expectation under the supplied pmf");
                }
            }
        }
    }

    PositivityAudit audit;
    audit.seed = seed;
    audit.samples = samples;
    if (jm.size() == 0) return audit;
    Sampler sampler(seed);
    const auto last = static_cast<std::int64_t>(jm.size()) - 1;
    for (std::size_t i = 0; i < samples; ++i) {
        const auto terms = sampler.uniform(1, 4);
        RationalVector f(jm.space().size());
        for (std::int64_t t = 0; t < terms; ++t) {
            const auto& ray = jm.rays()[static_cast<std::size_t>(sampler.uniform(0, last))];
            Rational weight = sampler.positive();
            for (std::size_t x = 0; x < f.size(); ++x) {
                if (sgn(ray[x]) != 0) f[x] += weight * ray[x];
            }
        }
        Gamble g(jm.space(), std::move(f));
        Rational e = expectation(pn, g);
        if (sgn(e) <= 0) audit.failures.push_back({std::move(g), std::move(e)});
    }
    return audit;
}

}  // namespace credal::oracle
