#pragma once

#include <initializer_list>
#include <string>
#include <vector>

#include "credal/gamble.hpp"

namespace credal::testing {

// Variable `id` with values id0, id1, ...
inline VariableSpace var(const std::string& id, std::size_t size)
{
    VariableSpace v{id, {}};
    for (std::size_t i = 0; i < size; ++i) v.values.push_back(id + std::to_string(i));
    return v;
}

inline RationalVector q(std::initializer_list<const char*> values)
{
    RationalVector out;
    for (const char* v : values) out.push_back(parse_rational(v));
    return out;
}

inline Gamble gamble(const Space& space, std::initializer_list<const char*> values)
{
    return Gamble(space, q(values));
}

inline Configuration config(const Space& full, std::map<NodeId, std::string> labels)
{
    std::vector<NodeId> ids;
    for (const auto& [id, label] : labels) ids.push_back(id);
    return Configuration::from_labels(full.restrict(Scope(std::move(ids))), labels);
}

}  // namespace credal::testing
