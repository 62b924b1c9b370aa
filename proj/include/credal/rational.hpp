#pragma once

#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

namespace credal {

// Exact arbitrary-precision fraction, always canonical (lowest terms,
// positive denominator). The only scalar type used anywhere.
using Rational = mpq_class;
using RationalVector = std::vector<Rational>;

// Accepts "p", "-p", "p/q" with decimal digits only. Floats are rejected.
Rational parse_rational(std::string_view text);

// Inverse of parse_rational: "p" for integers, "p/q" otherwise.
std::string to_string(const Rational& value);

inline int sign(const Rational& value) { return sgn(value); }

}  // namespace credal
