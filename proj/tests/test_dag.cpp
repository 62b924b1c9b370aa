#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "credal/dag.hpp"
#include "credal/error.hpp"
#include "credal/random.hpp"

using namespace credal;

namespace {

const Dag chain({"a", "b", "c"}, {{"a", "b"}, {"b", "c"}});
const Dag collider({"a", "b", "c"}, {{"a", "c"}, {"b", "c"}});

// Random graph over n nodes; edges follow a shuffled order so it is acyclic.
Dag random_dag(Sampler& sampler, std::size_t n)
{
    std::vector<NodeId> nodes;
    for (std::size_t i = 0; i < n; ++i) nodes.push_back("n" + std::to_string(i));
    std::vector<NodeId> order = nodes;
    std::shuffle(order.begin(), order.end(), sampler.engine());
    std::vector<Edge> edges;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            if (sampler.uniform(0, 2) == 0) edges.emplace_back(order[i], order[j]);
        }
    }
    return Dag(nodes, edges);
}

}  // namespace

TEST_CASE("chain relations")
{
    CHECK(chain.descendants("a") == Scope{"b", "c"});
    CHECK(chain.roots() == Scope{"a"});
    CHECK(chain.leaves() == Scope{"c"});
    CHECK(chain.non_parent_non_descendants("c") == Scope{"a"});
    CHECK(chain.non_parent_non_descendants("a") == Scope{});
    CHECK(chain.parents("b") == Scope{"a"});
}

TEST_CASE("single node is both root and leaf")
{
    Dag one({"a"}, {});
    CHECK(one.parents("a").empty());
    CHECK(one.descendants("a").empty());
    CHECK(one.roots() == Scope{"a"});
    CHECK(one.leaves() == Scope{"a"});
}

TEST_CASE("collider relations")
{
    CHECK(collider.children("a") == Scope{"c"});
    CHECK(collider.parents("c") == Scope{"a", "b"});
    CHECK(collider.non_parent_non_descendants("a") == Scope{"b"});
}

TEST_CASE("unknown nodes and malformed graphs")
{
    CHECK_THROWS_AS(chain.parents("z"), UnknownNodeError);
    CHECK_THROWS_AS(chain.non_parent_non_descendants("z"), UnknownNodeError);
    CHECK_THROWS_AS(Dag({"a"}, {{"a", "z"}}), UnknownNodeError);
    CHECK_THROWS_AS(Dag({"a", "b"}, {{"a", "b"}, {"a", "b"}}), Error);
    CHECK_THROWS_AS(Dag({"a", "a"}, {}), Error);
}

TEST_CASE("validate examples")
{
    auto cyc = validate(Dag({"a", "b"}, {{"a", "b"}, {"b", "a"}}));
    CHECK_FALSE(cyc.acyclic);
    CHECK(cyc.cycle == std::vector<NodeId>{"a", "b", "a"});

    auto ok = validate(chain);
    CHECK(ok.acyclic);
    CHECK(ok.order == std::vector<NodeId>{"a", "b", "c"});

    auto empty = validate(Dag{});
    CHECK(empty.acyclic);
    CHECK(empty.order.empty());

    auto self = validate(Dag({"a"}, {{"a", "a"}}));
    CHECK_FALSE(self.acyclic);
    CHECK(self.cycle == std::vector<NodeId>{"a", "a"});
}

TEST_CASE("reported cycles are closed walks along edges")
{
    Dag g({"a", "b", "c", "d"}, {{"a", "b"}, {"b", "c"}, {"c", "d"}, {"d", "b"}});
    auto v = validate(g);
    REQUIRE_FALSE(v.acyclic);
    REQUIRE(v.cycle.size() >= 3);
    CHECK(v.cycle.front() == v.cycle.back());
    for (std::size_t i = 0; i + 1 < v.cycle.size(); ++i) {
        CHECK(g.children(v.cycle[i]).contains(v.cycle[i + 1]));
    }
}

TEST_CASE("topological orders respect every edge")
{
    Sampler sampler(41);
    for (int trial = 0; trial < 40; ++trial) {
        Dag g = random_dag(sampler, static_cast<std::size_t>(sampler.uniform(1, 7)));
        auto v = validate(g);
        REQUIRE(v.acyclic);
        REQUIRE(v.order.size() == g.nodes().size());
        for (const auto& [p, c] : g.edges()) {
            auto pi = std::find(v.order.begin(), v.order.end(), p);
            auto ci = std::find(v.order.begin(), v.order.end(), c);
            CHECK(pi < ci);
        }
    }
}

TEST_CASE("node partition, leaves and transitivity")
{
    Sampler sampler(42);
    for (int trial = 0; trial < 40; ++trial) {
        Dag g = random_dag(sampler, static_cast<std::size_t>(sampler.uniform(1, 7)));
        CHECK_FALSE(g.leaves().empty());
        CHECK_FALSE(g.roots().empty());
        const Scope all(g.nodes());
        for (const auto& s : g.nodes()) {
            const Scope self{s};
            const Scope p = g.parents(s);
            const Scope d = g.descendants(s);
            const Scope n = g.non_parent_non_descendants(s);
            CHECK(unite(unite(self, p), unite(d, n)) == all);
            CHECK(intersect(self, p).empty());
            CHECK(intersect(self, d).empty());
            CHECK(intersect(self, n).empty());
            CHECK(intersect(p, d).empty());
            CHECK(intersect(p, n).empty());
            CHECK(intersect(d, n).empty());
            for (const auto& t : d) CHECK(d.includes(g.descendants(t)));
        }
    }
}
