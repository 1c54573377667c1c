#pragma once

#include <cstdint>
#include <random>
#include <vector>

namespace gt {

// splitmix64 step; used to derive independent per-trial seeds from one root
// seed so trial results do not depend on evaluation order.
inline std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t stream) {
    std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (stream + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

// Unbiased uniform draw from [0, bound).  Rejection sampling on the raw
// 64-bit stream: unlike uniform_int_distribution the output sequence is
// pinned by this code, not by the standard library implementation.
inline std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound) {
    if (bound == 0) return 0;
    const std::uint64_t limit = bound * ((~std::uint64_t{0}) / bound);
    for (;;) {
        std::uint64_t v = rng();
        if (v < limit) return v % bound;
    }
}

// k distinct values from [0, n), ascending.  Partial Fisher-Yates over an
// index array for small n; plain rejection when n is large and k tiny.
std::vector<std::uint64_t> sample_distinct(std::mt19937_64& rng, std::uint64_t n, std::uint64_t k);

} // namespace gt
