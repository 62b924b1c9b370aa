#include "credal/space.hpp"

#include <algorithm>
#include <iterator>
#include <set>

#include "credal/error.hpp"

namespace credal {

std::optional<std::size_t> VariableSpace::index_of(const std::string& label) const
{
    auto it = std::find(values.begin(), values.end(), label);
    if (it == values.end()) {
        return std::nullopt;
    }
    return static_cast<std::size_t>(it - values.begin());
}

// ---------------------------------------------------------------- Scope

Scope::Scope(std::vector<NodeId> ids)
    : ids_(std::move(ids))
{
    std::sort(ids_.begin(), ids_.end());
    if (std::adjacent_find(ids_.begin(), ids_.end()) != ids_.end()) {
        throw ScopeError("duplicate node id in scope");
    }
}

Scope::Scope(std::initializer_list<NodeId> ids)
    : Scope(std::vector<NodeId>(ids))
{
}

bool Scope::contains(const NodeId& id) const
{
    return std::binary_search(ids_.begin(), ids_.end(), id);
}

bool Scope::includes(const Scope& other) const
{
    return std::includes(ids_.begin(), ids_.end(), other.ids_.begin(), other.ids_.end());
}

Scope unite(const Scope& a, const Scope& b)
{
    Scope out;
    std::set_union(a.ids_.begin(), a.ids_.end(), b.ids_.begin(), b.ids_.end(),
                   std::back_inserter(out.ids_));
    return out;
}

Scope intersect(const Scope& a, const Scope& b)
{
    Scope out;
    std::set_intersection(a.ids_.begin(), a.ids_.end(), b.ids_.begin(), b.ids_.end(),
                          std::back_inserter(out.ids_));
    return out;
}

Scope subtract(const Scope& a, const Scope& b)
{
    Scope out;
    std::set_difference(a.ids_.begin(), a.ids_.end(), b.ids_.begin(), b.ids_.end(),
                        std::back_inserter(out.ids_));
    return out;
}

std::string to_string(const Scope& scope)
{
    std::string out = "{";
    for (std::size_t i = 0; i < scope.size(); ++i) {
        if (i) out += ",";
        out += scope.ids()[i];
    }
    return out + "}";
}

// ---------------------------------------------------------------- Space

Space::Space(std::vector<VariableSpace> variables)
    : vars_(std::move(variables))
{
    std::sort(vars_.begin(), vars_.end(),
              [](const VariableSpace& a, const VariableSpace& b) { return a.id < b.id; });
    for (std::size_t i = 0; i < vars_.size(); ++i) {
        const auto& v = vars_[i];
        if (i > 0 && vars_[i - 1].id == v.id) {
            throw ScopeError("duplicate variable '" + v.id + "'");
        }
        if (v.values.empty()) {
            throw ScopeError("variable '" + v.id + "' has an empty value set");
        }
        std::set<std::string> seen(v.values.begin(), v.values.end());
        if (seen.size() != v.values.size()) {
            throw ScopeError("variable '" + v.id + "' has duplicate value labels");
        }
    }
    strides_.assign(vars_.size(), 1);
    size_ = 1;
    for (std::size_t i = vars_.size(); i-- > 0;) {
        strides_[i] = size_;
        size_ *= vars_[i].size();
    }
}

Scope Space::scope() const
{
    std::vector<NodeId> ids;
    ids.reserve(vars_.size());
    for (const auto& v : vars_) ids.push_back(v.id);
    return Scope(std::move(ids));
}

std::optional<std::size_t> Space::position(const NodeId& id) const
{
    auto it = std::lower_bound(vars_.begin(), vars_.end(), id,
                               [](const VariableSpace& v, const NodeId& key) { return v.id < key; });
    if (it == vars_.end() || it->id != id) {
        return std::nullopt;
    }
    return static_cast<std::size_t>(it - vars_.begin());
}

const VariableSpace& Space::variable(const NodeId& id) const
{
    auto pos = position(id);
    if (!pos) {
        throw ScopeError("node '" + id + "' is not in scope " + to_string(scope()));
    }
    return vars_[*pos];
}

bool Space::includes(const Space& other) const
{
    for (const auto& v : other.vars_) {
        auto pos = position(v.id);
        if (!pos || vars_[*pos].values != v.values) {
            return false;
        }
    }
    return true;
}

Space Space::restrict(const Scope& ids) const
{
    std::vector<VariableSpace> sub;
    sub.reserve(ids.size());
    for (const auto& id : ids) {
        sub.push_back(variable(id));
    }
    return Space(std::move(sub));
}

Space Space::unite(const Space& other) const
{
    std::vector<VariableSpace> all = vars_;
    for (const auto& v : other.vars_) {
        auto pos = position(v.id);
        if (pos) {
            if (vars_[*pos].values != v.values) {
                throw ScopeError("inconsistent value sets for node '" + v.id + "'");
            }
            continue;
        }
        all.push_back(v);
    }
    return Space(std::move(all));
}

std::vector<std::size_t> Space::digits(std::size_t index) const
{
    if (index >= size_) {
        throw DimensionError("configuration index out of range");
    }
    std::vector<std::size_t> out(vars_.size());
    for (std::size_t i = 0; i < vars_.size(); ++i) {
        out[i] = index / strides_[i];
        index %= strides_[i];
    }
    return out;
}

std::size_t Space::index(std::span<const std::size_t> digits) const
{
    if (digits.size() != vars_.size()) {
        throw DimensionError("configuration arity mismatch");
    }
    std::size_t out = 0;
    for (std::size_t i = 0; i < vars_.size(); ++i) {
        if (digits[i] >= vars_[i].size()) {
            throw DimensionError("value index out of range for node '" + vars_[i].id + "'");
        }
        out += digits[i] * strides_[i];
    }
    return out;
}

std::size_t Space::project(std::size_t index, const Space& sub) const
{
    auto full = digits(index);
    std::size_t out = 0;
    for (std::size_t j = 0; j < sub.vars_.size(); ++j) {
        auto pos = position(sub.vars_[j].id);
        if (!pos) {
            throw ScopeError("projection onto a scope that is not contained");
        }
        out += full[*pos] * sub.strides_[j];
    }
    return out;
}

std::vector<std::size_t> Space::projection_table(const Space& sub) const
{
    if (!includes(sub)) {
        throw ScopeError("projection onto " + to_string(sub.scope()) + " from "
                         + to_string(scope()) + ": scope not contained");
    }
    std::vector<std::size_t> where(sub.vars_.size());
    for (std::size_t j = 0; j < sub.vars_.size(); ++j) {
        where[j] = *position(sub.vars_[j].id);
    }
    std::vector<std::size_t> table(size_);
    std::vector<std::size_t> d(vars_.size(), 0);
    for (std::size_t idx = 0; idx < size_; ++idx) {
        std::size_t out = 0;
        for (std::size_t j = 0; j < where.size(); ++j) {
            out += d[where[j]] * sub.strides_[j];
        }
        table[idx] = out;
        // odometer increment, last variable fastest
        for (std::size_t i = vars_.size(); i-- > 0;) {
            if (++d[i] < vars_[i].size()) break;
            d[i] = 0;
        }
    }
    return table;
}

// -------------------------------------------------------- Configuration

Configuration::Configuration(Space space, std::vector<std::size_t> digits)
    : space_(std::move(space))
    , digits_(std::move(digits))
{
    space_.index(digits_);  // validates arity and ranges
}

Configuration::Configuration(Space space, std::size_t index)
    : space_(std::move(space))
    , digits_(space_.digits(index))
{
}

Configuration Configuration::from_labels(Space space, const std::map<NodeId, std::string>& labels)
{
    std::vector<std::size_t> digits;
    digits.reserve(space.arity());
    for (const auto& v : space.variables()) {
        auto it = labels.find(v.id);
        if (it == labels.end()) {
            throw ScopeError("no value given for node '" + v.id + "'");
        }
        auto idx = v.index_of(it->second);
        if (!idx) {
            throw ScopeError("'" + it->second + "' is not a value of node '" + v.id + "'");
        }
        digits.push_back(*idx);
    }
    if (labels.size() != space.arity()) {
        for (const auto& [id, label] : labels) {
            if (!space.position(id)) {
                throw ScopeError("node '" + id + "' is not in scope " + to_string(space.scope()));
            }
        }
    }
    return Configuration(std::move(space), std::move(digits));
}

std::size_t Configuration::digit(const NodeId& id) const
{
    auto pos = space_.position(id);
    if (!pos) {
        throw ScopeError("node '" + id + "' is not assigned by this configuration");
    }
    return digits_[*pos];
}

const std::string& Configuration::label(const NodeId& id) const
{
    return space_.variable(id).values[digit(id)];
}

std::map<NodeId, std::string> Configuration::labels() const
{
    std::map<NodeId, std::string> out;
    for (std::size_t i = 0; i < digits_.size(); ++i) {
        const auto& v = space_.variables()[i];
        out.emplace(v.id, v.values[digits_[i]]);
    }
    return out;
}

Configuration Configuration::restrict(const Scope& ids) const
{
    Space sub = space_.restrict(ids);
    std::vector<std::size_t> d;
    d.reserve(sub.arity());
    for (const auto& v : sub.variables()) {
        d.push_back(digit(v.id));
    }
    return Configuration(std::move(sub), std::move(d));
}

Configuration Configuration::merge(const Configuration& other) const
{
    if (!intersect(scope(), other.scope()).empty()) {
        throw ScopeError("cannot merge configurations with overlapping scopes");
    }
    Space joint = space_.unite(other.space_);
    std::vector<std::size_t> d;
    d.reserve(joint.arity());
    for (const auto& v : joint.variables()) {
        d.push_back(space_.position(v.id) ? digit(v.id) : other.digit(v.id));
    }
    return Configuration(std::move(joint), std::move(d));
}

bool Configuration::agrees_with(const Configuration& other) const
{
    for (std::size_t i = 0; i < digits_.size(); ++i) {
        const auto& id = space_.variables()[i].id;
        if (other.space_.position(id) && other.digit(id) != digits_[i]) {
            return false;
        }
    }
    return true;
}

std::string to_string(const Configuration& config)
{
    std::string out = "(";
    const auto& vars = config.space().variables();
    for (std::size_t i = 0; i < vars.size(); ++i) {
        if (i) out += ",";
        out += vars[i].id + "=" + vars[i].values[config.digits()[i]];
    }
    return out + ")";
}

std::vector<Configuration> configurations(const Space& space)
{
    std::vector<Configuration> out;
    out.reserve(space.size());
    for (std::size_t i = 0; i < space.size(); ++i) {
        out.emplace_back(space, i);
    }
    return out;
}

}  // namespace credal
