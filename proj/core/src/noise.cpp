#include "grouptest/noise.hpp"

#include <algorithm>
#include <limits>
#include <random>
#include <stdexcept>
#include <string>

#include "grouptest/errors.hpp"
#include "grouptest/random.hpp"

namespace gt {
namespace {

// Sum of C(n, i) for i <= b, clamped to cap + 1.
std::uint64_t volume_capped(std::uint64_t n, std::uint64_t b, std::uint64_t cap) {
    if (b > n) b = n;
    unsigned __int128 sum = 1; // i = 0
    unsigned __int128 c = 1;
    for (std::uint64_t i = 1; i <= b; ++i) {
        c = c * (n - i + 1) / i;
        sum += c;
        if (sum > cap || c > cap) return cap + 1;
    }
    return static_cast<std::uint64_t>(sum);
}

std::vector<std::uint64_t> positions_with_value(const BitVec& y, bool value) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t i = 0; i < y.size(); ++i)
        if (y.get(i) == value) out.push_back(i);
    return out;
}

} // namespace

CorruptionResult corrupt_random(const BitVec& y, const NoiseBudget& budget,
                                std::uint64_t seed) {
    CorruptionResult result;
    result.observation = y;
    std::mt19937_64 rng(seed);

    auto zeros = positions_with_value(y, false);
    std::uint64_t k0 = std::min<std::uint64_t>(budget.e0, zeros.size());
    for (std::uint64_t i = 0; i < k0; ++i) {
        std::uint64_t j = i + uniform_below(rng, zeros.size() - i);
        std::swap(zeros[i], zeros[j]);
        result.observation.set(zeros[i], true);
    }
    result.e0_applied = k0;

    auto ones = positions_with_value(y, true);
    std::uint64_t k1 = std::min<std::uint64_t>(budget.e1, ones.size());
    for (std::uint64_t i = 0; i < k1; ++i) {
        std::uint64_t j = i + uniform_below(rng, ones.size() - i);
        std::swap(ones[i], ones[j]);
        result.observation.set(ones[i], false);
    }
    result.e1_applied = k1;
    return result;
}

BitVec corrupt_adversarial_greedy(const BitMatrix& A, const SupportSet& x,
                                  const NoiseBudget& budget, std::uint64_t block_length,
                                  const Rational& nu_over_gamma) {
    if (x.universe() != A.cols())
        throw DimensionMismatch("greedy: support universe != matrix columns");

    const std::uint64_t T = block_length;
    const Rational& q = nu_over_gamma;
    // Decoding threshold: the smallest count with count/T >= 1 - nu/gamma.
    const __int128 tnum = static_cast<__int128>(T) * (q.den() - q.num());
    const std::uint64_t tau = static_cast<std::uint64_t>((tnum + q.den() - 1) / q.den());

    BitVec y = encode(A, x);
    const auto& support = x.indices();
    const std::uint64_t n_cols = A.cols();

    // --- false negatives: starve the weakest true codeword ---------------
    if (budget.e1 > 0 && !support.empty()) {
        // Rows hit by exactly one support column can be flipped without
        // collateral damage to the other true codewords.
        std::vector<std::uint64_t> counts(support.size());
        for (std::size_t s = 0; s < support.size(); ++s)
            counts[s] = A.column_weight(support[s]);
        std::vector<std::vector<std::uint32_t>> exclusive(support.size());
        {
            std::vector<std::uint8_t> per_row(A.rows(), 0);
            for (std::uint32_t c : support)
                for (std::uint32_t r : A.column(c))
                    if (per_row[r] < 255) ++per_row[r];
            for (std::size_t s = 0; s < support.size(); ++s)
                for (std::uint32_t r : A.column(support[s]))
                    if (per_row[r] == 1) exclusive[s].push_back(r);
        }
        std::vector<std::size_t> cursor(support.size(), 0);

        for (std::uint64_t flip = 0; flip < budget.e1; ++flip) {
            // Smallest margin first; ties go to the smaller column index.
            std::size_t best = support.size();
            for (std::size_t s = 0; s < support.size(); ++s) {
                if (cursor[s] >= exclusive[s].size()) continue;
                if (best == support.size() || counts[s] < counts[best]) best = s;
            }
            std::uint32_t row;
            if (best != support.size()) {
                row = exclusive[best][cursor[best]++];
            } else {
                // No exclusive rows anywhere; fall back to any still-set row
                // of the weakest column.
                std::size_t weakest = support.size();
                for (std::size_t s = 0; s < support.size(); ++s)
                    if (counts[s] > 0 && (weakest == support.size() || counts[s] < counts[weakest]))
                        weakest = s;
                if (weakest == support.size()) break; // nothing left to remove
                row = std::numeric_limits<std::uint32_t>::max();
                for (std::uint32_t r : A.column(support[weakest]))
                    if (y.get(r)) {
                        row = r;
                        break;
                    }
                if (row == std::numeric_limits<std::uint32_t>::max()) break;
            }
            y.set(row, false);
            // Every support column present in this row loses one row.
            auto row_cols = A.row(row);
            for (std::size_t s = 0; s < support.size(); ++s)
                if (std::binary_search(row_cols.begin(), row_cols.end(), support[s]))
                    --counts[s];
        }
    }

    // --- false positives: push the best non-support codeword over tau ----
    if (budget.e0 > 0) {
        std::vector<std::uint64_t> counts(n_cols, 0);
        for (std::uint64_t r = 0; r < A.rows(); ++r)
            if (y.get(r))
                for (std::uint32_t c : A.row(r)) ++counts[c];
        std::vector<bool> in_support(n_cols, false);
        for (std::uint32_t c : support) in_support[c] = true;

        for (std::uint64_t flip = 0; flip < budget.e0; ++flip) {
            std::uint64_t best = n_cols;
            bool best_below = false;
            for (std::uint64_t c = 0; c < n_cols; ++c) {
                if (in_support[c] || counts[c] >= A.column_weight(c)) continue;
                bool below = counts[c] < tau;
                // Prefer columns still below the threshold with the highest
                // count; otherwise any column with headroom.
                if (best == n_cols || (below && !best_below) ||
                    (below == best_below && counts[c] > counts[best]))
                    best = c;
                if (best == c) best_below = below;
            }
            if (best == n_cols) break; // every non-support column saturated
            std::uint32_t row = 0;
            bool found = false;
            for (std::uint32_t r : A.column(best))
                if (!y.get(r)) {
                    row = r;
                    found = true;
                    break;
                }
            if (!found) break;
            y.set(row, true);
            for (std::uint32_t c : A.row(row))
                if (!in_support[c]) ++counts[c];
        }
    }
    return y;
}

BitVec corrupt_adversarial_greedy(const BitMatrix& A, const SupportSet& x,
                                  const NoiseBudget& budget, const SchemeParams& params) {
    if (A.rows() != params.M() || A.cols() != params.N())
        throw DimensionMismatch("greedy: matrix shape does not match the bundle");
    if (x.weight() > params.sparsity)
        throw std::invalid_argument("greedy: support weight exceeds the bundle sparsity");
    return corrupt_adversarial_greedy(A, x, budget, params.T(), params.nu_over_gamma());
}

NoisePatternStream::NoisePatternStream(const BitVec& y, const NoiseBudget& budget,
                                       std::uint64_t cap)
    : base_(y) {
    zeros_ = positions_with_value(y, false);
    ones_ = positions_with_value(y, true);
    e0_max_ = std::min<std::uint64_t>(budget.e0, zeros_.size());
    e1_max_ = std::min<std::uint64_t>(budget.e1, ones_.size());
    std::uint64_t v0 = volume_capped(zeros_.size(), e0_max_, cap);
    std::uint64_t v1 = volume_capped(ones_.size(), e1_max_, cap);
    unsigned __int128 total = static_cast<unsigned __int128>(v0) * v1;
    if (v0 > cap || v1 > cap || total > cap)
        throw CapExceeded("noise patterns: count exceeds cap of " + std::to_string(cap));
    total_ = static_cast<std::uint64_t>(total);
}

void NoisePatternStream::reset_combination(std::vector<std::uint64_t>& combo,
                                           std::uint64_t size) {
    combo.resize(size);
    for (std::uint64_t i = 0; i < size; ++i) combo[i] = i;
}

bool NoisePatternStream::advance_combination(std::vector<std::uint64_t>& combo,
                                             const std::vector<std::uint64_t>& positions) {
    const std::uint64_t k = combo.size();
    const std::uint64_t n = positions.size();
    std::uint64_t i = k;
    while (i > 0 && combo[i - 1] == n - k + i - 1) --i;
    if (i == 0) return false;
    ++combo[i - 1];
    for (std::uint64_t j = i; j < k; ++j) combo[j] = combo[j - 1] + 1;
    return true;
}

BitVec NoisePatternStream::apply() const {
    BitVec out = base_;
    for (std::uint64_t idx : insert_) out.set(zeros_[idx], true);
    for (std::uint64_t idx : remove_) out.set(ones_[idx], false);
    return out;
}

bool NoisePatternStream::next(BitVec& out) {
    if (done_) return false;
    if (fresh_) {
        fresh_ = false;
        reset_combination(insert_, 0);
        reset_combination(remove_, 0);
        out = apply();
        return true;
    }
    // Insertions cycle fastest, then removals, then the flip-count pair
    // (i ascending, j ascending within i).
    if (insert_.size() > 0 && advance_combination(insert_, zeros_)) {
        out = apply();
        return true;
    }
    if (remove_.size() > 0 && advance_combination(remove_, ones_)) {
        reset_combination(insert_, insert_.size());
        out = apply();
        return true;
    }
    if (j_ < e1_max_) {
        ++j_;
    } else if (i_ < e0_max_) {
        ++i_;
        j_ = 0;
    } else {
        done_ = true;
        return false;
    }
    reset_combination(insert_, i_);
    reset_combination(remove_, j_);
    out = apply();
    return true;
}

} // namespace gt
