#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace credal {

using NodeId = std::string;

// The possibility space X_s of a single node: a non-empty ordered list of
// distinct value labels. Value order is fixed and drives enumeration.
struct VariableSpace
{
    NodeId id;
    std::vector<std::string> values;

    std::size_t size() const { return values.size(); }
    std::optional<std::size_t> index_of(const std::string& label) const;

    friend bool operator==(const VariableSpace&, const VariableSpace&) = default;
};

// Canonical (sorted, duplicate free) set of node ids.
class Scope
{
public:
    Scope() = default;
    Scope(std::vector<NodeId> ids);
    Scope(std::initializer_list<NodeId> ids);

    const std::vector<NodeId>& ids() const { return ids_; }
    std::size_t size() const { return ids_.size(); }
    bool empty() const { return ids_.empty(); }
    bool contains(const NodeId& id) const;
    bool includes(const Scope& other) const;

    auto begin() const { return ids_.begin(); }
    auto end() const { return ids_.end(); }

    friend Scope unite(const Scope& a, const Scope& b);
    friend Scope intersect(const Scope& a, const Scope& b);
    friend Scope subtract(const Scope& a, const Scope& b);

    friend bool operator==(const Scope&, const Scope&) = default;

private:
    std::vector<NodeId> ids_;
};

std::string to_string(const Scope& scope);

// The joint possibility space X_S of a scope S. Variables are kept in
// sorted id order; configurations are enumerated lexicographically with
// the first variable most significant. The empty space has exactly one
// configuration.
class Space
{
public:
    Space() = default;
    explicit Space(std::vector<VariableSpace> variables);

    const std::vector<VariableSpace>& variables() const { return vars_; }
    Scope scope() const;
    std::size_t arity() const { return vars_.size(); }

    // Number of configurations; 1 for the empty space.
    std::size_t size() const { return size_; }

    std::optional<std::size_t> position(const NodeId& id) const;
    const VariableSpace& variable(const NodeId& id) const;

    // Every variable of `other` appears here with an identical value list.
    bool includes(const Space& other) const;

    Space restrict(const Scope& ids) const;
    Space unite(const Space& other) const;

    std::vector<std::size_t> digits(std::size_t index) const;
    std::size_t index(std::span<const std::size_t> digits) const;

    // Index in `sub` of the restriction of configuration `index`.
    std::size_t project(std::size_t index, const Space& sub) const;

    // Table mapping every configuration of *this to its index in `sub`.
    std::vector<std::size_t> projection_table(const Space& sub) const;

    friend bool operator==(const Space& a, const Space& b) { return a.vars_ == b.vars_; }

private:
    std::vector<VariableSpace> vars_;
    std::vector<std::size_t> strides_;
    std::size_t size_ = 1;
};

// An assignment of one value to every node of a space (x_S).
class Configuration
{
public:
    Configuration() = default;
    Configuration(Space space, std::vector<std::size_t> digits);
    Configuration(Space space, std::size_t index);

    // Builds from value labels; every node of `space` must be assigned.
    static Configuration from_labels(Space space, const std::map<NodeId, std::string>& labels);

    const Space& space() const { return space_; }
    Scope scope() const { return space_.scope(); }
    const std::vector<std::size_t>& digits() const { return digits_; }
    std::size_t index() const { return space_.index(digits_); }

    std::size_t digit(const NodeId& id) const;
    const std::string& label(const NodeId& id) const;
    std::map<NodeId, std::string> labels() const;

    Configuration restrict(const Scope& ids) const;
    // Union of two configurations on disjoint scopes.
    Configuration merge(const Configuration& other) const;
    // True when both assign the same values on their common nodes.
    bool agrees_with(const Configuration& other) const;

    friend bool operator==(const Configuration&, const Configuration&) = default;

private:
    Space space_;
    std::vector<std::size_t> digits_;
};

std::string to_string(const Configuration& config);

// Every configuration of `space` in lexicographic order.
std::vector<Configuration> configurations(const Space& space);

}  // namespace credal
