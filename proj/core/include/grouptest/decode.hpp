#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "grouptest/bit_matrix.hpp"
#include "grouptest/bitvec.hpp"
#include "grouptest/errors.hpp"
#include "grouptest/rational.hpp"
#include "grouptest/support_set.hpp"

namespace gt {

// Thrown when a decoder matrix violates the uniform-column-weight contract.
class ColumnWeightError : public std::invalid_argument {
public:
    explicit ColumnWeightError(const std::string& what) : std::invalid_argument(what) {}
};

struct DecodeResult {
    SupportSet support;
    std::vector<std::uint32_t> scores; // per-column count of set rows
    std::uint64_t block_length = 0;    // T used for the threshold
    Rational nu_over_gamma;            // exact threshold parameter
    std::uint64_t threshold_count = 0; // smallest count admitted
};

// Agreement-threshold decoder: column i is declared present iff its count of
// set observation rows reaches T * (1 - nu_over_gamma); the comparison is the
// exact cross-multiplied integer one, admitting equality.  Requires y_hat of
// length A.rows(), every column weight exactly T, and 0 <= nu_over_gamma < 1.
DecodeResult threshold_decode(const BitMatrix& A, const BitVec& y_hat, std::uint64_t T,
                              const Rational& nu_over_gamma);

// One round of the sparsity-doubling protocol.
struct DoublingRound {
    BitMatrix matrix;
    std::uint64_t block_length = 0;
    Rational nu_over_gamma;
};

struct DoublingResult {
    DecodeResult result;
    std::uint64_t guess = 0;             // sparsity guess that stopped
    unsigned rounds = 0;                 // rounds run, including the last
    std::uint64_t total_measurements = 0;
};

// Doubles the sparsity guess (1, 2, 4, ..., capped at `universe`), asking
// `round` for each guess's measurement setup and `observe` for the fresh
// observation, and returns the first round whose decoded weight is at most
// weight_cap(guess).  Throws CapExceeded when every guess up to the universe
// size fails.
DoublingResult decode_with_doubling(
    const std::function<DoublingRound(std::uint64_t)>& round,
    const std::function<BitVec(std::uint64_t, const BitMatrix&)>& observe,
    const std::function<std::uint64_t(std::uint64_t)>& weight_cap,
    std::uint64_t universe);

// Brute-force reference decoder: every support of weight <= d whose encoding
// is within `budget` of y_hat.  The number of candidate supports must not
// exceed `cap` (0 means the GT_ENUM_CAP / built-in default).
std::vector<SupportSet> oracle_decode_exhaustive(const BitMatrix& A, const BitVec& y_hat,
                                                 std::uint64_t d, const NoiseBudget& budget,
                                                 std::uint64_t cap = 0);

} // namespace gt
