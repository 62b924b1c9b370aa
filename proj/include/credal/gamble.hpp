#pragma once

#include <string>

#include "credal/rational.hpp"
#include "credal/space.hpp"

namespace credal {

enum class SignClass {
    strictly_positive,  // f >= 0 and f != 0
    nonpositive,        // f <= 0 and f != 0
    zero,
    mixed,
};

std::string to_string(SignClass s);

// A rational-valued map on the configurations of a space, stored densely in
// lexicographic configuration order. A gamble on the empty space is a
// single rational.
class Gamble
{
public:
    Gamble() : table_(1) {}
    Gamble(Space space, RationalVector table);

    static Gamble constant(Space space, const Rational& value);
    static Gamble zero(Space space) { return constant(std::move(space), 0); }

    const Space& space() const { return space_; }
    Scope scope() const { return space_.scope(); }
    const RationalVector& table() const { return table_; }
    std::size_t size() const { return table_.size(); }

    const Rational& operator[](std::size_t index) const { return table_[index]; }
    const Rational& at(const Configuration& config) const;

    bool is_zero() const;

    Gamble operator-() const;
    Gamble& operator*=(const Rational& factor);

    // Implicitly extends both operands to the union scope.
    friend Gamble operator+(const Gamble& f, const Gamble& g);
    friend Gamble operator-(const Gamble& f, const Gamble& g);
    // Pointwise product, on the union scope.
    friend Gamble operator*(const Gamble& f, const Gamble& g);

    friend bool operator==(const Gamble&, const Gamble&) = default;

private:
    Space space_;
    RationalVector table_;
};

// f_U(x_U) := f_S(x_S) for the target U containing S.
Gamble cylindrical_extend(const Gamble& f, const Space& target);

// Indicator of the event {config} extended to `target`. The indicator of
// the empty configuration is the constant 1.
Gamble indicator(const Configuration& config, const Space& target);

// Scaling by a strictly positive rational.
Gamble scale(const Rational& factor, const Gamble& f);

SignClass compare_sign(const Gamble& f);

std::string to_string(const Gamble& f);

}  // namespace credal
