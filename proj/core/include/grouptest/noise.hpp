#pragma once

#include <cstdint>
#include <vector>

#include "grouptest/bit_matrix.hpp"
#include "grouptest/bitvec.hpp"
#include "grouptest/scheme_params.hpp"
#include "grouptest/support_set.hpp"

namespace gt {

// Outcome of a random corruption; the flip counts actually applied are
// reported because budgets silently cap at the available positions.
struct CorruptionResult {
    BitVec observation;
    std::uint64_t e0_applied = 0; // 0 -> 1 flips
    std::uint64_t e1_applied = 0; // 1 -> 0 flips
};

// Flips min(budget.e0, #zeros) zero positions and min(budget.e1, #ones) one
// positions, each chosen uniformly without replacement; fully determined by
// `seed` (zero positions are drawn first).
CorruptionResult corrupt_random(const BitVec& y, const NoiseBudget& budget,
                                std::uint64_t seed);

// Deterministic greedy adversary against the agreement-threshold decoder.
// False negatives repeatedly hit the support column with the smallest
// remaining agreement margin, preferring rows where it is the only support
// column present; false positives raise the non-support codeword currently
// closest to the decoding threshold.  A heuristic lower bound on adversarial
// power -- it stays within budget but makes no optimality claim.
BitVec corrupt_adversarial_greedy(const BitMatrix& A, const SupportSet& x,
                                  const NoiseBudget& budget, std::uint64_t block_length,
                                  const Rational& nu_over_gamma);

// Bundle-checked variant: A must be the bundle's T*L x N codeword graph and
// x must be D-sparse for it.
BitVec corrupt_adversarial_greedy(const BitMatrix& A, const SupportSet& x,
                                  const NoiseBudget& budget, const SchemeParams& params);

// Streams every observation within `budget` of y exactly once (ascending
// flip counts; insertion patterns cycle fastest).  The pattern count
// V(zeros, e0) * V(ones, e1) must not exceed `cap` or the constructor throws.
class NoisePatternStream {
public:
    NoisePatternStream(const BitVec& y, const NoiseBudget& budget, std::uint64_t cap);

    // Writes the next pattern into `out`; returns false when exhausted.
    bool next(BitVec& out);

    std::uint64_t total() const { return total_; }

private:
    bool advance_combination(std::vector<std::uint64_t>& combo,
                             const std::vector<std::uint64_t>& positions);
    void reset_combination(std::vector<std::uint64_t>& combo, std::uint64_t size);
    BitVec apply() const;

    BitVec base_;
    std::vector<std::uint64_t> zeros_;
    std::vector<std::uint64_t> ones_;
    std::uint64_t e0_max_ = 0, e1_max_ = 0;
    std::uint64_t i_ = 0, j_ = 0; // current flip counts
    std::vector<std::uint64_t> insert_, remove_;
    bool done_ = false;
    bool fresh_ = true;
    std::uint64_t total_ = 0;
};

} // namespace gt
