#pragma once

// Seeded evaluation points. Draws use raw mt19937_64 output reduced by modulo
// rather than std::uniform_int_distribution, whose algorithm is left to the
// standard library; this keeps a given seed portable across toolchains.

#include <cstdint>
#include <random>
#include <vector>

#include "wilsonid/rational.hpp"

namespace wilsonid {

/// numerator in [-bound, bound], denominator in [1, bound], then canonicalized.
inline Rational random_rational(std::mt19937_64& gen, std::int64_t bound = 1000) {
    const auto span = static_cast<std::uint64_t>(2 * bound + 1);
    const auto num = static_cast<std::int64_t>(gen() % span) - bound;
    const auto den = static_cast<std::int64_t>(gen() % static_cast<std::uint64_t>(bound)) + 1;
    return Rational::make(Integer(num), Integer(den));
}

inline std::vector<Rational> random_rationals(std::uint64_t seed, std::size_t count,
                                              std::int64_t bound = 1000) {
    std::mt19937_64 gen(seed);
    std::vector<Rational> out;
    out.reserve(count);
    for (std::size_t k = 0; k < count; ++k) out.push_back(random_rational(gen, bound));
    return out;
}

}  // namespace wilsonid
