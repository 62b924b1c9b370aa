#include <algorithm>
#include <set>

#include "credal/lp.hpp"

namespace credal::lp {

ZeroTargetError::ZeroTargetError()
    : Error("conic membership of the zero vector is undefined here; use contains_zero")
{
}

namespace {

std::size_t common_dimension(std::span<const Rational> target, const Rays& rays)
{
    for (const auto& r : rays) {
        if (r.size() != target.size()) {
            throw DimensionError("ray of length " + std::to_string(r.size())
                                 + " against target of length " + std::to_string(target.size()));
        }
    }
    return target.size();
}

bool is_zero(std::span<const Rational> v)
{
    return std::all_of(v.begin(), v.end(), [](const Rational& x) { return sgn(x) == 0; });
}

// Distinct nonzero rays, in order of first appearance, with the index of
// that first appearance. Duplicates and zero rays add nothing to a cone.
std::vector<std::size_t> distinct_rays(const Rays& rays)
{
    // Lexicographic order with a cheap path over the many shared zeros.
    auto less = [](const RationalVector* a, const RationalVector* b) {
        for (std::size_t i = 0; i < a->size(); ++i) {
            const int sa = sgn((*a)[i]);
            const int sb = sgn((*b)[i]);
            if (sa != sb) return sa < sb;
            if (sa == 0) continue;
            const int c = cmp((*a)[i], (*b)[i]);
            if (c != 0) return c < 0;
        }
        return false;
    };
    std::vector<std::size_t> keep;
    std::set<const RationalVector*, decltype(less)> seen(less);
    for (std::size_t k = 0; k < rays.size(); ++k) {
        if (is_zero(rays[k])) continue;
        if (seen.insert(&rays[k]).second) keep.push_back(k);
    }
    return keep;
}

}  // namespace

Membership conic_membership(std::span<const Rational> target, const Rays& rays)
{
    const std::size_t dim = common_dimension(target, rays);
    if (is_zero(target)) {
        throw ZeroTargetError();
    }
    auto keep = distinct_rays(rays);

    // Rows where the target and every kept ray vanish carry no information.
    std::vector<std::size_t> live_rows;
    for (std::size_t i = 0; i < dim; ++i) {
        bool live = sgn(target[i]) != 0;
        for (std::size_t k = 0; !live && k < keep.size(); ++k) live = sgn(rays[keep[k]][i]) != 0;
        if (live) live_rows.push_back(i);
    }

    LinearSystem sys(keep.size());
    sys.constraints.reserve(live_rows.size());
    for (std::size_t i : live_rows) {
        RationalVector row(keep.size());
        for (std::size_t k = 0; k < keep.size(); ++k) row[k] = rays[keep[k]][i];
        sys.add(std::move(row), Relation::equal, target[i]);
    }
    LpOutcome res = solve(sys);

    Membership out;
    out.member = res.status != Status::infeasible;
    if (out.member) {
        out.coefficients.assign(rays.size(), 0);
        for (std::size_t k = 0; k < keep.size(); ++k) out.coefficients[keep[k]] = res.witness[k];
    }
    return out;
}

std::optional<RationalVector> vanishing_combination(const Rays& rays)
{
    if (rays.empty()) return std::nullopt;
    const std::size_t dim = rays.front().size();
    for (const auto& r : rays) {
        if (r.size() != dim) throw DimensionError("rays of different lengths");
    }
    const std::size_t k = rays.size();
    LinearSystem sys(k);
    sys.constraints.reserve(dim + 1);
    for (std::size_t i = 0; i < dim; ++i) {
        RationalVector row(k);
        bool any = false;
        for (std::size_t j = 0; j < k; ++j) {
            row[j] = rays[j][i];
            any |= sgn(row[j]) != 0;
        }
        if (any) sys.add(std::move(row), Relation::equal, 0);
    }
    sys.add(RationalVector(k, 1), Relation::equal, 1);
    LpOutcome res = solve(sys);
    if (res.status == Status::infeasible) return std::nullopt;
    return res.witness;
}

bool contains_zero(const Rays& rays)
{
    return vanishing_combination(rays).has_value();
}

std::optional<RationalVector> separating_functional(std::span<const Rational> target,
                                                    const Rays& rays)
{
    const std::size_t dim = common_dimension(target, rays);
    LinearSystem sys(dim);
    sys.bounds.assign(dim, Bound::free);
    for (const auto& r : rays) sys.add(r, Relation::greater_equal, 0);
    RationalVector neg(target.begin(), target.end());
    for (auto& v : neg) v = -v;
    sys.add(std::move(neg), Relation::greater_equal, 1);
    LpOutcome res = solve(sys);
    if (res.status == Status::infeasible) return std::nullopt;
    return res.witness;
}

}  // namespace credal::lp
