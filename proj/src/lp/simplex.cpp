#include <algorithm>
#include <string>

#include "credal/lp.hpp"

namespace credal::lp {

void LinearSystem::add(RationalVector coefficients, Relation relation, Rational rhs)
{
    constraints.push_back({std::move(coefficients), relation, std::move(rhs)});
}

const char* to_string(Status s)
{
    switch (s) {
    case Status::optimal: return "optimal";
    case Status::infeasible: return "infeasible";
    case Status::unbounded: return "unbounded";
    }
    return "?";
}

Rational dot(std::span<const Rational> a, std::span<const Rational> b)
{
    if (a.size() != b.size()) {
        throw DimensionError("dot product of vectors with different lengths");
    }
    Rational out = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (sgn(a[i]) != 0 && sgn(b[i]) != 0) out += a[i] * b[i];
    }
    return out;
}

namespace {

// Consecutive degenerate pivots tolerated under Dantzig pricing before
// switching to Bland's rule for the rest of the plateau.
constexpr std::size_t kDegenerateStreak = 16;

void check_dimensions(const LinearSystem& sys)
{
    if (sys.objective.size() != sys.variables) {
        throw DimensionError("objective has " + std::to_string(sys.objective.size())
                             + " coefficients, expected " + std::to_string(sys.variables));
    }
    if (!sys.bounds.empty() && sys.bounds.size() != sys.variables) {
        throw DimensionError("bounds list does not match the variable count");
    }
    for (std::size_t i = 0; i < sys.constraints.size(); ++i) {
        if (sys.constraints[i].coefficients.size() != sys.variables) {
            throw DimensionError("constraint row " + std::to_string(i) + " has "
                                 + std::to_string(sys.constraints[i].coefficients.size())
                                 + " coefficients, expected " + std::to_string(sys.variables));
        }
    }
}

// Dense tableau in standard form  A x = b, x >= 0, b >= 0.
class Tableau
{
public:
    Tableau(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), a_(rows * (cols + 1)), basic_(rows, 0), obj_(cols + 1)
    {
    }

    Rational& at(std::size_t r, std::size_t c) { return a_[r * (cols_ + 1) + c]; }
    const Rational& at(std::size_t r, std::size_t c) const { return a_[r * (cols_ + 1) + c]; }
    Rational& rhs(std::size_t r) { return at(r, cols_); }
    const Rational& rhs(std::size_t r) const { return at(r, cols_); }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    std::vector<std::size_t>& basic() { return basic_; }

    // Reduced costs against the current basis for `cost` (maximisation).
    void price(const RationalVector& cost)
    {
        for (std::size_t j = 0; j < cols_; ++j) obj_[j] = cost[j];
        obj_[cols_] = 0;
        for (std::size_t r = 0; r < rows_; ++r) {
            const Rational& cb = cost[basic_[r]];
            if (sgn(cb) == 0) continue;
            for (std::size_t j = 0; j <= cols_; ++j) {
                const Rational& v = at(r, j);
                if (sgn(v) != 0) obj_[j] -= cb * v;
            }
        }
    }

    Rational objective_value() const { return -obj_[cols_]; }

    void pivot(std::size_t r, std::size_t e)
    {
        nz_.clear();
        const Rational p = at(r, e);
        for (std::size_t j = 0; j <= cols_; ++j) {
            Rational& v = at(r, j);
            if (sgn(v) != 0) {
                v /= p;
                nz_.push_back(j);
            }
        }
        for (std::size_t i = 0; i < rows_; ++i) {
            if (i == r) continue;
            eliminate(&at(i, 0), r, e);
        }
        eliminate(obj_.data(), r, e);
        basic_[r] = e;
    }

    // Runs primal simplex on the current objective. Columns flagged in
    // `blocked` never enter. Returns the unbounded column, if any.
    std::optional<std::size_t> optimise(const std::vector<char>& blocked, std::size_t& pivots)
    {
        std::size_t streak = 0;
        bool bland = false;
        for (;;) {
            std::optional<std::size_t> enter;
            for (std::size_t j = 0; j < cols_; ++j) {
                if (blocked[j] || sgn(obj_[j]) <= 0) continue;
                if (bland) {
                    enter = j;
                    break;
                }
                if (!enter || obj_[j] > obj_[*enter]) enter = j;
            }
            if (!enter) return std::nullopt;

            std::optional<std::size_t> leave;
            Rational best;
            for (std::size_t i = 0; i < rows_; ++i) {
                const Rational& coef = at(i, *enter);
                if (sgn(coef) <= 0) continue;
                Rational ratio = rhs(i) / coef;
                if (!leave || ratio < best || (ratio == best && basic_[i] < basic_[*leave])) {
                    leave = i;
                    best = std::move(ratio);
                }
            }
            if (!leave) return enter;

            if (sgn(best) == 0) {
                if (++streak >= kDegenerateStreak) bland = true;
            } else {
                streak = 0;
                bland = false;
            }
            pivot(*leave, *enter);
            ++pivots;
        }
    }

    // Divides row r so that column c carries a one.
    void scale_row(std::size_t r, std::size_t c)
    {
        const Rational p = at(r, c);
        for (std::size_t j = 0; j <= cols_; ++j) {
            if (sgn(at(r, j)) != 0) at(r, j) /= p;
        }
    }

    void drop_row(std::size_t r)
    {
        a_.erase(a_.begin() + static_cast<std::ptrdiff_t>(r * (cols_ + 1)),
                 a_.begin() + static_cast<std::ptrdiff_t>((r + 1) * (cols_ + 1)));
        basic_.erase(basic_.begin() + static_cast<std::ptrdiff_t>(r));
        --rows_;
    }

private:
    // row -= row[e] * (normalised pivot row r)
    void eliminate(Rational* row, std::size_t r, std::size_t e)
    {
        if (sgn(row[e]) == 0) return;
        const Rational factor = row[e];
        const Rational* prow = &at(r, 0);
        for (std::size_t j : nz_) row[j] -= factor * prow[j];
    }

    std::size_t rows_;
    std::size_t cols_;
    std::vector<Rational> a_;
    std::vector<std::size_t> basic_;
    RationalVector obj_;
    std::vector<std::size_t> nz_;
};

}  // namespace

LpOutcome solve(const LinearSystem& sys)
{
    check_dimensions(sys);
    const std::size_t n = sys.variables;
    const std::size_t m = sys.constraints.size();

    auto is_free = [&](std::size_t j) { return !sys.bounds.empty() && sys.bounds[j] == Bound::free; };

    // Structural columns: one per nonnegative variable, two per free one.
    std::vector<std::size_t> plus_col(n);
    std::vector<std::optional<std::size_t>> minus_col(n);
    std::size_t cols = 0;
    for (std::size_t j = 0; j < n; ++j) {
        plus_col[j] = cols++;
        if (is_free(j)) minus_col[j] = cols++;
    }
    const std::size_t structural = cols;

    std::vector<std::optional<std::size_t>> surplus(m);
    for (std::size_t i = 0; i < m; ++i) {
        if (sys.constraints[i].relation == Relation::greater_equal) surplus[i] = cols++;
    }

    // Rows with negative rhs are negated; a >= row with negative rhs then
    // has a +1 slack that can start in the basis.
    std::vector<int> row_sign(m, 1);
    for (std::size_t i = 0; i < m; ++i) {
        if (sgn(sys.constraints[i].rhs) < 0) row_sign[i] = -1;
    }

    // A nonnegative variable appearing in a single row, with positive
    // coefficient after the sign flip, can also start in the basis.
    std::vector<std::optional<std::size_t>> unit(m);
    {
        std::vector<std::size_t> rows_of(n, 0);
        std::vector<std::size_t> last_row(n, 0);
        for (std::size_t i = 0; i < m; ++i) {
            for (std::size_t j = 0; j < n; ++j) {
                if (sgn(sys.constraints[i].coefficients[j]) != 0) {
                    ++rows_of[j];
                    last_row[j] = i;
                }
            }
        }
        for (std::size_t j = 0; j < n; ++j) {
            if (is_free(j) || rows_of[j] != 1) continue;
            const std::size_t i = last_row[j];
            if (unit[i] || row_sign[i] * sgn(sys.constraints[i].coefficients[j]) <= 0) continue;
            unit[i] = j;
        }
    }

    // Every remaining row gets an artificial variable.
    std::vector<std::optional<std::size_t>> artificial(m);
    const std::size_t first_artificial = cols;
    for (std::size_t i = 0; i < m; ++i) {
        bool slack_basic = sys.constraints[i].relation == Relation::greater_equal && row_sign[i] < 0;
        if (!slack_basic && !unit[i]) artificial[i] = cols++;
    }

    Tableau tab(m, cols);
    for (std::size_t i = 0; i < m; ++i) {
        const auto& c = sys.constraints[i];
        for (std::size_t j = 0; j < n; ++j) {
            if (sgn(c.coefficients[j]) == 0) continue;
            Rational v = row_sign[i] * c.coefficients[j];
            if (minus_col[j]) tab.at(i, *minus_col[j]) = -v;
            tab.at(i, plus_col[j]) = std::move(v);
        }
        if (surplus[i]) tab.at(i, *surplus[i]) = -row_sign[i];
        tab.rhs(i) = row_sign[i] * c.rhs;
        if (artificial[i]) {
            tab.at(i, *artificial[i]) = 1;
            tab.basic()[i] = *artificial[i];
        } else if (surplus[i] && row_sign[i] < 0) {
            tab.basic()[i] = *surplus[i];
        } else {
            tab.scale_row(i, plus_col[*unit[i]]);
            tab.basic()[i] = plus_col[*unit[i]];
        }
    }

    LpOutcome out;
    std::vector<char> blocked(cols, 0);

    // Phase 1: maximise -(sum of artificials).
    if (first_artificial < cols) {
        RationalVector cost(cols);
        for (std::size_t j = first_artificial; j < cols; ++j) cost[j] = -1;
        tab.price(cost);
        tab.optimise(blocked, out.pivots);
        if (sgn(tab.objective_value()) < 0) {
            out.status = Status::infeasible;
            return out;
        }
        // Drive zero-level artificials out of the basis; a row with no
        // structural entry left is redundant.
        for (std::size_t r = tab.rows(); r-- > 0;) {
            if (tab.basic()[r] < first_artificial) continue;
            std::optional<std::size_t> col;
            for (std::size_t j = 0; j < first_artificial; ++j) {
                if (sgn(tab.at(r, j)) != 0) {
                    col = j;
                    break;
                }
            }
            if (col) {
                tab.pivot(r, *col);
                ++out.pivots;
            } else {
                tab.drop_row(r);
            }
        }
        for (std::size_t j = first_artificial; j < cols; ++j) blocked[j] = 1;
    }

    // Phase 2.
    RationalVector cost(cols);
    for (std::size_t j = 0; j < n; ++j) {
        cost[plus_col[j]] = sys.objective[j];
        if (minus_col[j]) cost[*minus_col[j]] = -sys.objective[j];
    }
    tab.price(cost);
    auto unbounded = tab.optimise(blocked, out.pivots);

    RationalVector column_value(structural);
    for (std::size_t r = 0; r < tab.rows(); ++r) {
        if (tab.basic()[r] < structural) column_value[tab.basic()[r]] = tab.rhs(r);
    }
    out.witness.resize(n);
    for (std::size_t j = 0; j < n; ++j) {
        out.witness[j] = column_value[plus_col[j]];
        if (minus_col[j]) out.witness[j] -= column_value[*minus_col[j]];
    }
    out.status = unbounded ? Status::unbounded : Status::optimal;
    out.objective = dot(sys.objective, out.witness);
    return out;
}

bool satisfies(const LinearSystem& sys, std::span<const Rational> x)
{
    check_dimensions(sys);
    if (x.size() != sys.variables) return false;
    for (std::size_t j = 0; j < sys.variables; ++j) {
        bool free = !sys.bounds.empty() && sys.bounds[j] == Bound::free;
        if (!free && sgn(x[j]) < 0) return false;
    }
    for (const auto& c : sys.constraints) {
        Rational lhs = dot(c.coefficients, x);
        if (c.relation == Relation::equal ? lhs != c.rhs : lhs < c.rhs) return false;
    }
    return true;
}

}  // namespace credal::lp
