#include "credal/dag.hpp"

#include <algorithm>
#include <queue>
#include <set>

#include "credal/error.hpp"

namespace credal {

Dag::Dag(std::vector<NodeId> nodes, std::vector<Edge> edges)
    : nodes_(std::move(nodes))
    , edges_(std::move(edges))
{
    std::sort(nodes_.begin(), nodes_.end());
    if (std::adjacent_find(nodes_.begin(), nodes_.end()) != nodes_.end()) {
        throw Error("duplicate node id in graph");
    }
    std::sort(edges_.begin(), edges_.end());
    if (auto dup = std::adjacent_find(edges_.begin(), edges_.end()); dup != edges_.end()) {
        throw Error("duplicate edge " + dup->first + " -> " + dup->second);
    }
    parents_.assign(nodes_.size(), {});
    children_.assign(nodes_.size(), {});
    for (const auto& [p, c] : edges_) {
        std::size_t pi = index(p);
        std::size_t ci = index(c);
        children_[pi].push_back(ci);
        parents_[ci].push_back(pi);
    }
}

bool Dag::contains(const NodeId& s) const
{
    return std::binary_search(nodes_.begin(), nodes_.end(), s);
}

std::size_t Dag::index(const NodeId& s) const
{
    auto it = std::lower_bound(nodes_.begin(), nodes_.end(), s);
    if (it == nodes_.end() || *it != s) {
        throw UnknownNodeError("unknown node '" + s + "'");
    }
    return static_cast<std::size_t>(it - nodes_.begin());
}

namespace {

Scope to_scope(const std::vector<NodeId>& names, const std::vector<std::size_t>& idx)
{
    std::vector<NodeId> ids;
    ids.reserve(idx.size());
    for (auto i : idx) ids.push_back(names[i]);
    return Scope(std::move(ids));
}

}  // namespace

Scope Dag::parents(const NodeId& s) const
{
    return to_scope(nodes_, parents_[index(s)]);
}

Scope Dag::children(const NodeId& s) const
{
    return to_scope(nodes_, children_[index(s)]);
}

Scope Dag::descendants(const NodeId& s) const
{
    std::vector<char> seen(nodes_.size(), 0);
    std::vector<std::size_t> stack = children_[index(s)];
    std::vector<std::size_t> out;
    while (!stack.empty()) {
        std::size_t t = stack.back();
        stack.pop_back();
        if (seen[t]) continue;
        seen[t] = 1;
        out.push_back(t);
        for (auto c : children_[t]) stack.push_back(c);
    }
    return to_scope(nodes_, out);
}

Scope Dag::non_parent_non_descendants(const NodeId& s) const
{
    Scope excluded = unite(unite(parents(s), descendants(s)), Scope{s});
    return subtract(Scope(nodes_), excluded);
}

Scope Dag::roots() const
{
    std::vector<NodeId> out;
    for (std::size_t i = 0; i < nodes_.size(); ++i) {
        if (parents_[i].empty()) out.push_back(nodes_[i]);
    }
    return Scope(std::move(out));
}

Scope Dag::leaves() const
{
    std::vector<NodeId> out;
    for (std::size_t i = 0; i < nodes_.size(); ++i) {
        if (children_[i].empty()) out.push_back(nodes_[i]);
    }
    return Scope(std::move(out));
}

DagValidation validate(const Dag& dag)
{
    const auto& nodes = dag.nodes();
    const std::size_t n = nodes.size();
    std::map<NodeId, std::size_t> pos;
    for (std::size_t i = 0; i < n; ++i) pos[nodes[i]] = i;
    std::vector<std::vector<std::size_t>> children(n);
    std::vector<std::size_t> indegree(n, 0);
    for (const auto& [p, c] : dag.edges()) {
        children[pos[p]].push_back(pos[c]);
        ++indegree[pos[c]];
    }

    DagValidation out;
    // Kahn with a min-heap on index so the order is deterministic.
    std::priority_queue<std::size_t, std::vector<std::size_t>, std::greater<>> ready;
    for (std::size_t i = 0; i < n; ++i) {
        if (indegree[i] == 0) ready.push(i);
    }
    while (!ready.empty()) {
        std::size_t i = ready.top();
        ready.pop();
        out.order.push_back(nodes[i]);
        for (auto c : children[i]) {
            if (--indegree[c] == 0) ready.push(c);
        }
    }
    if (out.order.size() == n) {
        out.acyclic = true;
        return out;
    }
    out.order.clear();

    // Iterative DFS for a back edge, starting from the smallest node id.
    enum : char { white, grey, black };
    std::vector<char> colour(n, white);
    std::vector<std::size_t> path;
    for (std::size_t root = 0; root < n && out.cycle.empty(); ++root) {
        if (colour[root] != white) continue;
        std::vector<std::pair<std::size_t, std::size_t>> stack{{root, 0}};
        colour[root] = grey;
        path.assign(1, root);
        while (!stack.empty() && out.cycle.empty()) {
            auto& [v, next] = stack.back();
            if (next < children[v].size()) {
                std::size_t w = children[v][next++];
                if (colour[w] == grey) {
                    auto start = std::find(path.begin(), path.end(), w);
                    for (auto it = start; it != path.end(); ++it) out.cycle.push_back(nodes[*it]);
                    out.cycle.push_back(nodes[w]);
                } else if (colour[w] == white) {
                    colour[w] = grey;
                    path.push_back(w);
                    stack.emplace_back(w, 0);
                }
            } else {
                colour[v] = black;
                path.pop_back();
                stack.pop_back();
            }
        }
    }
    return out;
}

}  // namespace credal
