#include "grouptest/expansion.hpp"

#include <random>
#include <stdexcept>
#include <vector>

#include "grouptest/random.hpp"

namespace gt {
namespace {

// C(n, k) clamped to cap + 1 so the caller can test "<= cap" without bignums.
std::uint64_t subsets_capped(std::uint64_t n, std::uint64_t k, std::uint64_t cap) {
    if (k > n) return 0;
    if (k > n - k) k = n - k;
    __int128 c = 1;
    for (std::uint64_t i = 1; i <= k; ++i) {
        c = c * static_cast<__int128>(n - k + i) / static_cast<__int128>(i);
        if (c > static_cast<__int128>(cap)) return cap + 1;
    }
    return static_cast<std::uint64_t>(c);
}

} // namespace

ExpansionReport sampled_expansion_check(const FunctionTable& f, unsigned k_bits,
                                        const Rational& eps, std::uint64_t trials,
                                        std::uint64_t seed, std::uint64_t exhaustive_cap) {
    if (eps < Rational(0) || !(eps < Rational(1)))
        throw std::invalid_argument("expansion: eps must lie in [0, 1)");
    const std::uint64_t N = f.inputs();
    const std::uint64_t K = std::uint64_t{1} << k_bits;
    if (K > N) throw std::invalid_argument("expansion: 2^k exceeds the number of inputs");
    const std::uint64_t T = f.seeds();
    const std::uint64_t L = f.alphabet();

    // Coverage >= (1 - eps) * K * T, compared exactly.
    const __int128 rhs = static_cast<__int128>(eps.den() - eps.num()) * K * T;

    std::vector<std::uint64_t> stamp(L, 0);
    std::uint64_t generation = 0;
    auto covers = [&](const std::vector<std::uint64_t>& subset) {
        std::uint64_t covered = 0;
        for (std::uint64_t i = 0; i < T; ++i) {
            ++generation;
            for (std::uint64_t x : subset) {
                std::uint32_t sym = f.lookup(x, i);
                if (stamp[sym] != generation) {
                    stamp[sym] = generation;
                    ++covered;
                }
            }
        }
        return static_cast<__int128>(covered) * eps.den() >= rhs;
    };

    ExpansionReport report;
    if (subsets_capped(N, K, exhaustive_cap) <= exhaustive_cap) {
        report.exhaustive = true;
        std::vector<std::uint64_t> subset(K);
        for (std::uint64_t i = 0; i < K; ++i) subset[i] = i;
        for (;;) {
            ++report.trials;
            if (covers(subset)) ++report.passes;
            // next K-combination of [0, N)
            std::uint64_t i = K;
            while (i > 0 && subset[i - 1] == N - K + i - 1) --i;
            if (i == 0) break;
            ++subset[i - 1];
            for (std::uint64_t j = i; j < K; ++j) subset[j] = subset[j - 1] + 1;
        }
    } else {
        for (std::uint64_t t = 0; t < trials; ++t) {
            std::mt19937_64 rng(mix_seed(seed, t));
            auto subset = sample_distinct(rng, N, K);
            ++report.trials;
            if (covers(subset)) ++report.passes;
        }
    }
    return report;
}

} // namespace gt
