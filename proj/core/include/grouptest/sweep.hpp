#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "grouptest/bit_matrix.hpp"
#include "grouptest/rational.hpp"

namespace gt {

// One noise level of a sweep: absolute flip budgets per trial.
struct GridPoint {
    std::uint64_t e0 = 0;
    std::uint64_t e1 = 0;
};

struct SweepConfig {
    std::uint64_t sparsity = 0;       // planted support weight per trial
    std::uint64_t trials = 0;         // per grid point
    std::uint64_t seed = 0;           // root seed; trials derive their own
    std::uint64_t block_length = 0;   // T for the decoder
    Rational nu_over_gamma;           // decoder threshold parameter
    std::uint64_t weight_cap = 0;     // K: success needs decoded weight < K
    std::vector<GridPoint> grid;
};

// Runs trials x grid Monte-Carlo decodes and renders the CSV:
//   trial,e0_applied,e1_applied,decoded_weight,false_pos,false_neg,success
// Rows are grouped by grid point in the given order; the trial column resets
// per point.  success = 1 iff no false negatives and decoded weight < K.
// Trials run concurrently but rows are emitted in trial order, so the output
// is byte-identical for identical inputs.
std::string run_sweep(const BitMatrix& A, const SweepConfig& config);

} // namespace gt
