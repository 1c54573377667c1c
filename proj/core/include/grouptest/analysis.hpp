#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

#include "grouptest/bit_matrix.hpp"
#include "grouptest/bitvec.hpp"
#include "grouptest/rational.hpp"
#include "grouptest/support_set.hpp"

namespace gt {

using BigInt = boost::multiprecision::cpp_int;

BigInt binomial(std::uint64_t a, std::uint64_t b);

// V(a, b): vectors of length a with weight <= b.  Requires b <= a.
BigInt hamming_volume(std::uint64_t a, std::uint64_t b);

// V'(a, b, e0, e1): vectors obtainable from a fixed weight-b vector of length
// a by at most e0 flips 0->1 and e1 flips 1->0 -- the direct double sum
// sum_{i<=e0} C(a-b, i) * sum_{j<=e1} C(b, j).  Requires b <= a; flip
// allowances beyond the available positions are capped.
BigInt close_ball_volume(std::uint64_t a, std::uint64_t b, std::uint64_t e0,
                         std::uint64_t e1);

// Uniform shape for the bound oracles: the evaluated bound, whether the
// instance satisfies it, and a short note (e.g. which disjunct fired).
struct BoundReport {
    std::string name;
    Rational computed;
    bool satisfied = false;
    std::string detail;
};

// (max(e0, e1) + 1) / (acc_e0 + acc_e1 + 1) <= m/d, exact.
BoundReport lemma1_check(std::uint64_t m, std::uint64_t d, std::uint64_t e0,
                         std::uint64_t e1, std::uint64_t acc_e0, std::uint64_t acc_e1);

// Either e1 < (acc_e1 + 1) * m / (eps * d), or
// acc_e0 >= (1 - eps)(n - d + 1) / (acc_e1 + 1)^2.  detail names the
// disjunct(s) that hold ("first", "second", "both", "none").
BoundReport lemma2_check(std::uint64_t m, std::uint64_t d, std::uint64_t n,
                         std::uint64_t e1, std::uint64_t acc_e0, std::uint64_t acc_e1,
                         const Rational& eps);

// Counting lower bound on the number of rows.
struct Lemma3Bound {
    BigInt ball_count;          // |B|: supports of weight <= d
    BigInt decodable_volume;    // v: outputs one recovered z may stand for
    std::int64_t exact_bound;   // ceil(log2 |B| - log2 v); may be <= 0
    double closed_form;         // d log2(n/d) - d - e0' - e1' log2((n-d-e0')/e1')
};
Lemma3Bound lemma3_bound(std::uint64_t n, std::uint64_t d, std::uint64_t acc_e0,
                         std::uint64_t acc_e1);

// Exhaustive check that A recovers every d-sparse input up to acc.e0 false
// positives, against every observation within `budget` of its encoding.
// Restricted to acc.e1 == 0, where the union of all consistent supports is
// the optimal reconstruction.
struct VerifyReport {
    bool pass = true;
    std::uint64_t pairs_evaluated = 0; // (input, noise pattern) pairs
    // Populated on failure with the lexicographically smallest bad
    // observation, the reconstruction, and a consistent support it overshoots.
    std::optional<BitVec> witness_observation;
    std::optional<SupportSet> witness_recovered;
    std::optional<SupportSet> witness_violator;
};
VerifyReport verify_correcting(const BitMatrix& A, std::uint64_t d,
                               const NoiseBudget& budget, const AccuracyBudget& acc,
                               std::uint64_t cap = 0);

} // namespace gt
