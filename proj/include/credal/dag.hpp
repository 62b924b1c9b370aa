#pragma once

#include <map>
#include <utility>
#include <vector>

#include "credal/space.hpp"

namespace credal {

using Edge = std::pair<NodeId, NodeId>;  // (parent, child)

// Directed graph over sorted node ids. Construction only checks that edge
// endpoints exist and edges are unique; acyclicity is established by
// validate(), which the network layer requires.
class Dag
{
public:
    Dag() = default;
    Dag(std::vector<NodeId> nodes, std::vector<Edge> edges);

    const std::vector<NodeId>& nodes() const { return nodes_; }
    const std::vector<Edge>& edges() const { return edges_; }
    bool contains(const NodeId& s) const;

    Scope parents(const NodeId& s) const;
    Scope children(const NodeId& s) const;
    // Nodes reachable from s by a non-empty directed path.
    Scope descendants(const NodeId& s) const;
    // G \ (P(s) u {s} u D(s))
    Scope non_parent_non_descendants(const NodeId& s) const;

    Scope roots() const;
    Scope leaves() const;

    friend bool operator==(const Dag&, const Dag&) = default;

private:
    std::size_t index(const NodeId& s) const;

    std::vector<NodeId> nodes_;
    std::vector<Edge> edges_;
    std::vector<std::vector<std::size_t>> parents_;
    std::vector<std::vector<std::size_t>> children_;
};

struct DagValidation
{
    bool acyclic = false;
    // Topological order (ties broken by id) when acyclic.
    std::vector<NodeId> order;
    // Closed walk s0 -> s1 -> ... -> s0 otherwise.
    std::vector<NodeId> cycle;
};

DagValidation validate(const Dag& dag);

}  // namespace credal
