#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "credal/error.hpp"
#include "credal/rational.hpp"

// Exact rational linear programming. Everything downstream (coherence,
// natural extension membership, previsions) reduces to the routines here.
namespace credal::lp {

enum class Relation { equal, greater_equal };

enum class Bound { nonnegative, free };

struct Constraint
{
    RationalVector coefficients;
    Relation relation = Relation::greater_equal;
    Rational rhs;
};

// maximize objective . x  subject to every constraint; each variable is
// either nonnegative or free (`bounds` empty means all nonnegative).
struct LinearSystem
{
    std::size_t variables = 0;
    std::vector<Constraint> constraints;
    RationalVector objective;
    std::vector<Bound> bounds;

    explicit LinearSystem(std::size_t n = 0) : variables(n), objective(n) {}

    void add(RationalVector coefficients, Relation relation, Rational rhs);
};

enum class Status { optimal, infeasible, unbounded };

const char* to_string(Status s);

struct LpOutcome
{
    Status status = Status::infeasible;
    // A feasible point; the maximiser when optimal. Empty when infeasible.
    RationalVector witness;
    Rational objective;
    std::size_t pivots = 0;
};

// Two-phase primal simplex over exact rationals. Dantzig pricing that
// falls back to Bland's rule on degenerate stretches, so it always
// terminates. Deterministic: the same system gives the same witness.
LpOutcome solve(const LinearSystem& system);

// True when `x` satisfies every constraint and bound exactly.
bool satisfies(const LinearSystem& system, std::span<const Rational> x);

// Raised when conic_membership is asked about the zero vector; use
// contains_zero for that question instead.
class ZeroTargetError : public Error
{
public:
    ZeroTargetError();
};

struct Membership
{
    bool member = false;
    // One coefficient per input ray (zero for rays not used).
    RationalVector coefficients;
};

using Rays = std::vector<RationalVector>;

// Decides whether target = sum_k lambda_k ray_k for some lambda >= 0.
// For a nonzero target this is exactly membership of the positive hull.
Membership conic_membership(std::span<const Rational> target, const Rays& rays);

// lambda >= 0 with sum lambda = 1 and sum lambda_k ray_k = 0, if any.
std::optional<RationalVector> vanishing_combination(const Rays& rays);

bool contains_zero(const Rays& rays);

// A functional y with y.ray >= 0 for every ray and y.target <= -1, if any.
// Exists exactly when the target is outside the cone spanned by the rays.
std::optional<RationalVector> separating_functional(std::span<const Rational> target,
                                                    const Rays& rays);

Rational dot(std::span<const Rational> a, std::span<const Rational> b);

}  // namespace credal::lp
