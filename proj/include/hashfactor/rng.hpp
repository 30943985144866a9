#pragma once

#include <cstdint>
#include <random>

namespace hashfactor {

// Canonical double in [0, 1) from the top 53 bits of one engine draw.
// std::uniform_real_distribution is implementation-defined, which would break
// the byte-identical-outputs contract across standard libraries.
inline double uniform_unit(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

// Unbiased draw in [0, n) by rejection.
inline std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t n) {
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
    std::uint64_t v = rng();
    while (v >= limit) v = rng();
    return v % n;
}

}  // namespace hashfactor
