#include "credal/gamble.hpp"

#include <algorithm>

#include "credal/error.hpp"

namespace credal {

std::string to_string(SignClass s)
{
    switch (s) {
    case SignClass::strictly_positive: return "strictly-positive";
    case SignClass::nonpositive: return "nonpositive";
    case SignClass::zero: return "zero";
    case SignClass::mixed: return "mixed";
    }
    return "?";
}

Gamble::Gamble(Space space, RationalVector table)
    : space_(std::move(space))
    , table_(std::move(table))
{
    if (table_.size() != space_.size()) {
        throw DimensionError("gamble table has " + std::to_string(table_.size())
                             + " entries but the space has " + std::to_string(space_.size())
                             + " configurations");
    }
}

Gamble Gamble::constant(Space space, const Rational& value)
{
    RationalVector table(space.size(), value);
    return Gamble(std::move(space), std::move(table));
}

const Rational& Gamble::at(const Configuration& config) const
{
    if (config.space() == space_) {
        return table_[config.index()];
    }
    if (!config.space().includes(space_)) {
        throw ScopeError("configuration " + to_string(config) + " does not fix scope "
                         + to_string(scope()));
    }
    return table_[config.space().project(config.index(), space_)];
}

bool Gamble::is_zero() const
{
    return std::all_of(table_.begin(), table_.end(), [](const Rational& v) { return v == 0; });
}

Gamble Gamble::operator-() const
{
    Gamble out = *this;
    for (auto& v : out.table_) v = -v;
    return out;
}

Gamble& Gamble::operator*=(const Rational& factor)
{
    for (auto& v : table_) v *= factor;
    return *this;
}

namespace {

template <typename Op>
Gamble pointwise(const Gamble& f, const Gamble& g, Op op)
{
    if (f.space() == g.space()) {
        RationalVector out(f.size());
        for (std::size_t i = 0; i < out.size(); ++i) out[i] = op(f[i], g[i]);
        return Gamble(f.space(), std::move(out));
    }
    Space joint = f.space().unite(g.space());
    auto pf = joint.projection_table(f.space());
    auto pg = joint.projection_table(g.space());
    RationalVector out(joint.size());
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = op(f[pf[i]], g[pg[i]]);
    return Gamble(std::move(joint), std::move(out));
}

}  // namespace

Gamble operator+(const Gamble& f, const Gamble& g)
{
    return pointwise(f, g, [](const Rational& a, const Rational& b) -> Rational { return a + b; });
}

Gamble operator-(const Gamble& f, const Gamble& g)
{
    return pointwise(f, g, [](const Rational& a, const Rational& b) -> Rational { return a - b; });
}

Gamble operator*(const Gamble& f, const Gamble& g)
{
    return pointwise(f, g, [](const Rational& a, const Rational& b) -> Rational { return a * b; });
}

Gamble cylindrical_extend(const Gamble& f, const Space& target)
{
    if (!target.includes(f.space())) {
        throw ScopeError("cannot extend a gamble on " + to_string(f.scope()) + " to "
                         + to_string(target.scope()) + ": scope not contained");
    }
    if (target == f.space()) {
        return f;
    }
    auto proj = target.projection_table(f.space());
    RationalVector out(target.size());
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = f[proj[i]];
    return Gamble(target, std::move(out));
}

Gamble indicator(const Configuration& config, const Space& target)
{
    if (!target.includes(config.space())) {
        throw ScopeError("cannot build the indicator of " + to_string(config) + " on "
                         + to_string(target.scope()) + ": scope not contained");
    }
    auto proj = target.projection_table(config.space());
    const std::size_t hit = config.index();
    RationalVector out(target.size());
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = proj[i] == hit ? 1 : 0;
    return Gamble(target, std::move(out));
}

Gamble scale(const Rational& factor, const Gamble& f)
{
    if (factor <= 0) {
        throw Error("scale factor must be strictly positive");
    }
    Gamble out = f;
    out *= factor;
    return out;
}

SignClass compare_sign(const Gamble& f)
{
    bool pos = false;
    bool neg = false;
    for (const auto& v : f.table()) {
        int s = sgn(v);
        pos |= s > 0;
        neg |= s < 0;
    }
    if (pos && neg) return SignClass::mixed;
    if (pos) return SignClass::strictly_positive;
    if (neg) return SignClass::nonpositive;
    return SignClass::zero;
}

std::string to_string(const Gamble& f)
{
    std::string out = to_string(f.scope()) + "[";
    for (std::size_t i = 0; i < f.size(); ++i) {
        if (i) out += ",";
        out += to_string(f[i]);
    }
    return out + "]";
}

}  // namespace credal
