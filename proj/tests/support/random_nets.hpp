#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "credal/net.hpp"
#include "credal/random.hpp"

namespace credal::testing {

struct NetShape
{
    std::int64_t max_nodes = 4;
    std::int64_t max_values = 3;
    std::int64_t max_generators = 2;
};

// A random net together with the pmfs its local assessments were drawn
// against: each local gamble has strictly positive expectation under them.
struct RandomNet
{
    std::shared_ptr<const CredalNet> net;
    std::map<NodeId, std::vector<RationalVector>> pmfs;
};

inline RationalVector random_pmf(Sampler& sampler, std::size_t size)
{
    RationalVector p(size);
    Rational total = 0;
    for (auto& v : p) {
        v = sampler.uniform(1, 4);
        total += v;
    }
    for (auto& v : p) v /= total;
    return p;
}

// Random nonzero gamble shifted so that its expectation under p is positive.
inline Gamble gamble_favoured_by(Sampler& sampler, const Space& space, const RationalVector& p)
{
    for (;;) {
        Gamble g = sampler.nonzero_gamble(space);
        Rational e = 0;
        for (std::size_t x = 0; x < g.size(); ++x) e += p[x] * g[x];
        if (sgn(e) <= 0) g = g + Gamble::constant(Space{}, sampler.positive(2, 4) - e);
        if (!g.is_zero()) return g;
    }
}

inline RandomNet random_net(Sampler& sampler, const NetShape& shape = {})
{
    const auto n = static_cast<std::size_t>(sampler.uniform(1, shape.max_nodes));
    std::vector<NodeId> nodes;
    std::vector<VariableSpace> vars;
    for (std::size_t i = 0; i < n; ++i) {
        VariableSpace v;
        v.id = std::string(1, static_cast<char>('a' + i));
        const auto size = sampler.uniform(2, shape.max_values);
        for (std::int64_t k = 0; k < size; ++k) v.values.push_back(v.id + std::to_string(k));
        nodes.push_back(v.id);
        vars.push_back(std::move(v));
    }
    // edges only go from earlier to later ids, so the graph is acyclic
    std::vector<Edge> edges;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            if (sampler.uniform(0, 1) == 1) edges.emplace_back(nodes[i], nodes[j]);
        }
    }
    Dag dag(nodes, edges);
    Space full(vars);

    RandomNet out;
    std::map<NodeId, std::vector<AssessmentCone>> cones;
    for (const auto& s : nodes) {
        const Space parents = full.restrict(dag.parents(s));
        const Space own = full.restrict(Scope{s});
        for (std::size_t xp = 0; xp < parents.size(); ++xp) {
            RationalVector p = random_pmf(sampler, own.size());
            std::vector<Gamble> gambles;
            const auto count = sampler.uniform(0, shape.max_generators);
            for (std::int64_t k = 0; k < count; ++k) gambles.push_back(gamble_favoured_by(sampler, own, p));
            cones[s].emplace_back(own, std::move(gambles));
            out.pmfs[s].push_back(std::move(p));
        }
    }
    out.net = std::make_shared<const CredalNet>(std::move(dag), std::move(vars), std::move(cones));
    return out;
}

}  // namespace credal::testing
