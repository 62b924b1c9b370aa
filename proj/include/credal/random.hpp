#pragma once

#include <cstdint>
#include <random>

#include "credal/gamble.hpp"

namespace credal {

// Seeded source of small rational test gambles. Draws are implemented on
// top of the raw mt19937_64 stream (not std::*_distribution) so sequences
// are identical across standard library implementations.
class Sampler
{
public:
    explicit Sampler(std::uint64_t seed) : engine_(seed) {}

    // Uniform integer in [lo, hi].
    std::int64_t uniform(std::int64_t lo, std::int64_t hi);

    // p/q with |p| <= max_abs and 1 <= q <= max_den.
    Rational rational(std::int64_t max_abs = 8, std::int64_t max_den = 4);
    // Strictly positive rational with numerator in [1, max_abs].
    Rational positive(std::int64_t max_abs = 8, std::int64_t max_den = 4);

    Gamble gamble(const Space& space);
    Gamble nonzero_gamble(const Space& space);
    // f <= 0 and f != 0.
    Gamble nonpositive_gamble(const Space& space);
    // f >= 0 and f != 0.
    Gamble positive_gamble(const Space& space);

    std::mt19937_64& engine() { return engine_; }

private:
    std::mt19937_64 engine_;
};

}  // namespace credal
