#include <algorithm>
#include <bit>
#include <cstdint>
#include <map>

#include "credal/oracle.hpp"

namespace credal::oracle {

namespace {

// a . lambda >= b, with the set of original inequalities it was derived from.
struct Inequality
{
    RationalVector a;
    Rational b;
    std::uint64_t history = 0;
};

struct Equation
{
    RationalVector a;
    Rational b;
};

// Scale so the first nonzero coefficient has magnitude one.
void normalise(Inequality& q)
{
    auto it = std::find_if(q.a.begin(), q.a.end(), [](const Rational& v) { return sgn(v) != 0; });
    if (it == q.a.end()) return;
    Rational s = abs(*it);
    if (s == 1) return;
    for (auto& v : q.a) v /= s;
    q.b /= s;
}

bool constant(const RationalVector& a)
{
    return std::all_of(a.begin(), a.end(), [](const Rational& v) { return sgn(v) == 0; });
}

}  // namespace

bool fm_membership(std::span<const Rational> target, const lp::Rays& rays)
{
    const std::size_t dim = target.size();
    const std::size_t k = rays.size();
    if (dim > kFmMaxDimension || k > kFmMaxRays) {
        throw SizeGuardError("Fourier-Motzkin oracle limited to dimension " + std::to_string(kFmMaxDimension)
                             + " and " + std::to_string(kFmMaxRays) + " rays");
    }
    for (const auto& r : rays) {
        if (r.size() != dim) throw DimensionError("ray length does not match target");
    }

    std::vector<Equation> eqs(dim);
    for (std::size_t i = 0; i < dim; ++i) {
        eqs[i].a.resize(k);
        for (std::size_t j = 0; j < k; ++j) eqs[i].a[j] = rays[j][i];
        eqs[i].b = target[i];
    }
    std::vector<Inequality> ineqs(k);
    for (std::size_t j = 0; j < k; ++j) {
        ineqs[j].a.assign(k, 0);
        ineqs[j].a[j] = 1;
        ineqs[j].b = 0;
        ineqs[j].history = std::uint64_t{1} << j;
    }

    // Substitute variables out through the equations.
    std::vector<char> eliminated(k, 0);
    std::vector<char> used(dim, 0);
    for (std::size_t v = 0; v < k; ++v) {
        std::size_t pivot = dim;
        for (std::size_t i = 0; i < dim; ++i) {
            if (!used[i] && sgn(eqs[i].a[v]) != 0) {
                pivot = i;
                break;
            }
        }
        if (pivot == dim) continue;
        used[pivot] = 1;
        eliminated[v] = 1;
        Equation e = eqs[pivot];
        const Rational lead = e.a[v];
        for (auto& c : e.a) c /= lead;
        e.b /= lead;
        for (std::size_t i = 0; i < dim; ++i) {
            if (i == pivot || sgn(eqs[i].a[v]) == 0) continue;
            const Rational c = eqs[i].a[v];
            for (std::size_t j = 0; j < k; ++j) eqs[i].a[j] -= c * e.a[j];
            eqs[i].b -= c * e.b;
        }
        for (auto& q : ineqs) {
            if (sgn(q.a[v]) == 0) continue;
            const Rational c = q.a[v];
            for (std::size_t j = 0; j < k; ++j) q.a[j] -= c * e.a[j];
            q.b -= c * e.b;
        }
    }
    for (std::size_t i = 0; i < dim; ++i) {
        if (!used[i] && constant(eqs[i].a) && sgn(eqs[i].b) != 0) return false;
    }

    auto settle = [](std::vector<Inequality>& rows) -> bool {
        // Drops constant rows (returning false on 0 >= b > 0) and rows
        // repeating both the coefficients and the history of another.
        // Rows with different histories are all kept: the history rule
        // below is only sound if no derived row is discarded for being
        // dominated by one that the rule may later prune.
        std::map<std::pair<RationalVector, std::uint64_t>, Inequality> unique;
        for (auto& q : rows) {
            if (constant(q.a)) {
                if (sgn(q.b) > 0) return false;
                continue;
            }
            normalise(q);
            auto [it, fresh] = unique.try_emplace({q.a, q.history}, q);
            if (!fresh && q.b > it->second.b) it->second = q;
        }
        rows.clear();
        for (auto& [key, q] : unique) rows.push_back(std::move(q));
        return true;
    };
    if (!settle(ineqs)) return false;

    std::size_t steps = 0;
    for (;;) {
        // Pick the remaining variable producing the fewest new rows.
        std::optional<std::size_t> var;
        std::size_t best = 0;
        for (std::size_t v = 0; v < k; ++v) {
            if (eliminated[v]) continue;
            std::size_t pos = 0;
            std::size_t neg = 0;
            for (const auto& q : ineqs) {
                int s = sgn(q.a[v]);
                pos += s > 0;
                neg += s < 0;
            }
            std::size_t cost = pos * neg;
            if (!var || cost < best) {
                var = v;
                best = cost;
            }
        }
        if (!var) break;
        const std::size_t v = *var;
        eliminated[v] = 1;
        ++steps;

        std::vector<Inequality> next;
        std::vector<const Inequality*> pos;
        std::vector<const Inequality*> neg;
        for (const auto& q : ineqs) {
            int s = sgn(q.a[v]);
            if (s > 0) pos.push_back(&q);
            else if (s < 0) neg.push_back(&q);
            else next.push_back(q);
        }
        for (const auto* p : pos) {
            for (const auto* n : neg) {
                std::uint64_t history = p->history | n->history;
                // Chernikov: rows built from more than steps+1 originals are redundant.
                if (static_cast<std::size_t>(std::popcount(history)) > steps + 1) continue;
                const Rational wp = -n->a[v];
                const Rational wn = p->a[v];
                Inequality q;
                q.a.resize(k);
                for (std::size_t j = 0; j < k; ++j) q.a[j] = wp * p->a[j] + wn * n->a[j];
                q.a[v] = 0;
                q.b = wp * p->b + wn * n->b;
                q.history = history;
                next.push_back(std::move(q));
            }
        }
        ineqs = std::move(next);
        if (!settle(ineqs)) return false;
    }
    return true;
}

}  // namespace credal::oracle
