#include "grouptest/random.hpp"

#include <algorithm>
#include <unordered_set>

namespace gt {

std::vector<std::uint64_t> sample_distinct(std::mt19937_64& rng, std::uint64_t n, std::uint64_t k) {
    if (k > n) k = n;
    std::vector<std::uint64_t> out;
    out.reserve(k);
    if (k == 0) return out;

    // Rejection is cheaper than materializing [0, n) once the sample is a
    // small fraction of the range.
    if (n > 4096 && k * 8 < n) {
        std::unordered_set<std::uint64_t> seen;
        seen.reserve(k * 2);
        while (out.size() < k) {
            std::uint64_t v = uniform_below(rng, n);
            if (seen.insert(v).second) out.push_back(v);
        }
    } else {
        std::vector<std::uint64_t> idx(n);
        for (std::uint64_t i = 0; i < n; ++i) idx[i] = i;
        for (std::uint64_t i = 0; i < k; ++i) {
            std::uint64_t j = i + uniform_below(rng, n - i);
            std::swap(idx[i], idx[j]);
            out.push_back(idx[i]);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace gt
