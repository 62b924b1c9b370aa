#include <algorithm>

#include "credal/net.hpp"

namespace credal {

namespace {

std::string join(const std::vector<NodeId>& ids, const char* sep)
{
    std::string out;
    for (std::size_t i = 0; i < ids.size(); ++i) {
        if (i) out += sep;
        out += ids[i];
    }
    return out;
}

}  // namespace

CycleError::CycleError(std::vector<NodeId> cycle)
    : Error("graph has a cycle: " + join(cycle, " -> "))
    , cycle_(std::move(cycle))
{
}

IncoherentLocalModelError::IncoherentLocalModelError(NodeId node, Configuration parents,
                                                     CoherenceReport report)
    : IncoherentModelError("local model of '" + node + "' given " + to_string(parents)
                           + " is incoherent")
    , node_(std::move(node))
    , parents_(std::move(parents))
    , report_(std::move(report))
{
}

const AssessmentCone& LocalModel::given(const Configuration& parents) const
{
    if (!(parents.space() == parent_space)) {
        return cones.at(parent_space.index(parents.restrict(parent_space.scope()).digits()));
    }
    return cones.at(parents.index());
}

CredalNet::CredalNet(Dag dag, std::vector<VariableSpace> variables,
                     std::map<NodeId, std::vector<AssessmentCone>> local_cones)
    : dag_(std::move(dag))
    , space_(std::move(variables))
{
    auto check = validate(dag_);
    if (!check.acyclic) {
        throw CycleError(check.cycle);
    }
    if (!(space_.scope() == Scope(dag_.nodes()))) {
        throw ScopeError("variables " + to_string(space_.scope()) + " do not match graph nodes "
                         + to_string(Scope(dag_.nodes())));
    }
    for (const auto& [node, cones] : local_cones) {
        if (!dag_.contains(node)) {
            throw UnknownNodeError("local model for unknown node '" + node + "'");
        }
    }
    for (const auto& s : dag_.nodes()) {
        LocalModel local;
        local.node = s;
        local.parent_space = space_of(dag_.parents(s));
        local.node_space = space_of(Scope{s});
        auto it = local_cones.find(s);
        std::vector<AssessmentCone> cones = it == local_cones.end() ? std::vector<AssessmentCone>{}
                                                                     : std::move(it->second);
        if (cones.size() != local.parent_space.size()) {
            throw IncompleteModelError("node '" + s + "' has " + std::to_string(cones.size())
                                       + " local models but " + std::to_string(local.parent_space.size())
                                       + " parent configurations");
        }
        for (std::size_t xp = 0; xp < cones.size(); ++xp) {
            if (!(cones[xp].space() == local.node_space)) {
                throw ScopeError("local model of '" + s + "' is not on X_" + s);
            }
            auto report = is_coherent(cones[xp]);
            if (!report.coherent) {
                throw IncoherentLocalModelError(s, Configuration(local.parent_space, xp), std::move(report));
            }
        }
        local.cones = std::move(cones);
        locals_.push_back(std::move(local));
    }
}

const LocalModel& CredalNet::local(const NodeId& s) const
{
    auto it = std::lower_bound(locals_.begin(), locals_.end(), s,
                               [](const LocalModel& m, const NodeId& key) { return m.node < key; });
    if (it == locals_.end() || it->node != s) {
        throw UnknownNodeError("unknown node '" + s + "'");
    }
    return *it;
}

// ------------------------------------------------------------------ joint

std::size_t generator_count(const CredalNet& net)
{
    std::size_t total = 0;
    for (const auto& local : net.locals()) {
        std::size_t contexts = net.space_of(net.dag().non_parent_non_descendants(local.node)).size();
        for (const auto& cone : local.cones) {
            total += contexts * (cone.assessment().size() + local.node_space.size());
        }
    }
    return total;
}

JointModel build_joint(std::shared_ptr<const CredalNet> net, std::size_t cap)
{
    const std::size_t count = generator_count(*net);
    if (count > cap) {
        throw CapExceededError(count, cap);
    }

    JointModel jm;
    jm.net_ = net;
    jm.rays_.reserve(count);
    jm.origins_.reserve(count);
    const Space& full = net->space();

    for (const auto& local : net->locals()) {
        const NodeId& s = local.node;
        const Scope parents = net->dag().parents(s);
        const Space context_space = net->space_of(net->dag().non_parent_non_descendants(s));
        const Space slice_space = net->space_of(unite(parents, context_space.scope()));
        const auto to_slice = full.projection_table(slice_space);
        const auto to_node = full.projection_table(local.node_space);

        for (std::size_t xp = 0; xp < local.parent_space.size(); ++xp) {
            const AssessmentCone& cone = local.cones[xp];
            const Configuration parent_config(local.parent_space, xp);
            lp::Rays local_generators = cone.rays();

            for (std::size_t xn = 0; xn < context_space.size(); ++xn) {
                const std::size_t slice =
                    parent_config.merge(Configuration(context_space, xn)).restrict(slice_space.scope()).index();
                for (std::size_t j = 0; j < local_generators.size(); ++j) {
                    const RationalVector& g = local_generators[j];
                    RationalVector ray(full.size());
                    for (std::size_t x = 0; x < full.size(); ++x) {
                        if (to_slice[x] == slice) ray[x] = g[to_node[x]];
                    }
                    jm.rays_.push_back(std::move(ray));
                    jm.origins_.push_back({s, xp, xn, j});
                }
            }
        }
    }
    return jm;
}

JointModel JointModel::with_sign_flipped(const NodeId& node, std::size_t parent_index,
                                         std::size_t assessment_index) const
{
    const auto& local = net_->local(node);
    if (parent_index >= local.cones.size()
        || assessment_index >= local.cones[parent_index].assessment().size()) {
        throw Error("no local assessment gamble " + std::to_string(assessment_index) + " for node '"
                    + node + "' at parent configuration " + std::to_string(parent_index));
    }
    JointModel out = *this;
    for (std::size_t k = 0; k < out.origins_.size(); ++k) {
        const auto& o = out.origins_[k];
        if (o.node == node && o.parent_index == parent_index && o.local_index == assessment_index) {
            for (auto& v : out.rays_[k]) v = -v;
        }
    }
    return out;
}

// ---------------------------------------------------------------- queries

bool joint_member(const JointModel& jm, const Gamble& f)
{
    Gamble g = cylindrical_extend(f, jm.space());
    if (g.is_zero()) {
        throw ZeroGambleError("membership query for the zero gamble");
    }
    return lp::conic_membership(g.table(), jm.rays()).member;
}

bool condition_member(const JointModel& jm, const Configuration& observed, const Gamble& f)
{
    if (!intersect(observed.scope(), f.scope()).empty()) {
        throw ScopeError("conditioning scope " + to_string(observed.scope()) + " overlaps gamble scope "
                         + to_string(f.scope()));
    }
    if (f.is_zero()) {
        throw ZeroGambleError("membership query for the zero gamble");
    }
    Gamble target = indicator(observed, jm.space()) * cylindrical_extend(f, jm.space());
    return lp::conic_membership(target.table(), jm.rays()).member;
}

bool marginal_member(const JointModel& jm, const Scope& target, const Configuration& observed,
                     const Gamble& f)
{
    if (!intersect(target, observed.scope()).empty()) {
        throw ScopeError("marginal scope " + to_string(target) + " overlaps conditioning scope "
                         + to_string(observed.scope()));
    }
    if (!target.includes(f.scope())) {
        throw ScopeError("gamble on " + to_string(f.scope()) + " does not live on " + to_string(target));
    }
    return condition_member(jm, observed, f);
}

AssessmentCone as_cone(const JointModel& jm)
{
    std::vector<Gamble> gens;
    gens.reserve(jm.size());
    for (std::size_t k = 0; k < jm.size(); ++k) gens.push_back(jm.generator(k));
    return AssessmentCone(jm.space(), std::move(gens));
}

}  // namespace credal
