#include "credal/random.hpp"

#include <stdexcept>

namespace credal {

std::int64_t Sampler::uniform(std::int64_t lo, std::int64_t hi)
{
    if (hi < lo) throw std::invalid_argument("empty sampling range");
    const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
    // rejection sampling keeps the draw unbiased
    const std::uint64_t limit = std::mt19937_64::max() - std::mt19937_64::max() % span;
    std::uint64_t x;
    do {
        x = engine_();
    } while (x >= limit);
    return lo + static_cast<std::int64_t>(x % span);
}

Rational Sampler::rational(std::int64_t max_abs, std::int64_t max_den)
{
    Rational r(static_cast<long>(uniform(-max_abs, max_abs)), static_cast<unsigned long>(uniform(1, max_den)));
    r.canonicalize();
    return r;
}

Rational Sampler::positive(std::int64_t max_abs, std::int64_t max_den)
{
    Rational r(static_cast<long>(uniform(1, max_abs)), static_cast<unsigned long>(uniform(1, max_den)));
    r.canonicalize();
    return r;
}

Gamble Sampler::gamble(const Space& space)
{
    RationalVector t(space.size());
    for (auto& v : t) v = rational();
    return Gamble(space, std::move(t));
}

Gamble Sampler::nonzero_gamble(const Space& space)
{
    for (;;) {
        Gamble g = gamble(space);
        if (!g.is_zero()) return g;
    }
}

Gamble Sampler::nonpositive_gamble(const Space& space)
{
    RationalVector t(space.size());
    bool any = false;
    for (auto& v : t) {
        v = uniform(0, 2) == 0 ? Rational(0) : Rational(-positive());
        any |= sgn(v) != 0;
    }
    if (!any) t[static_cast<std::size_t>(uniform(0, static_cast<std::int64_t>(t.size()) - 1))] = -positive();
    return Gamble(space, std::move(t));
}

Gamble Sampler::positive_gamble(const Space& space)
{
    return -nonpositive_gamble(space);
}

}  // namespace credal
