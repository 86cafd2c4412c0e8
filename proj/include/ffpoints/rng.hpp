#pragma once

// Deterministic randomness helpers.  mt19937_64 has a standardized output
// sequence, and the rejection sampler below avoids the implementation-defined
// std::uniform_int_distribution, so any seeded draw reproduces everywhere.

#include <cstdint>
#include <random>

namespace ffp {

inline constexpr std::uint64_t kDefaultSeed = 1729;

// Uniform draw from [0, n), n >= 1, by rejection below the largest multiple.
inline std::uint64_t bounded_u64(std::mt19937_64& g, std::uint64_t n) {
    if (n <= 1) return 0;
    std::uint64_t threshold = (0 - n) % n;  // 2^64 mod n
    for (;;) {
        std::uint64_t r = g();
        if (r >= threshold) return r % n;
    }
}

// Stable seed derivation (splitmix64 step), so subsystems can fork streams.
inline std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t salt) {
    std::uint64_t z = seed + 0x9e3779b97f4a7c15ull * (salt + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}

}  // namespace ffp
