#pragma once

#include <cstdint>

#include "grouptest/function_table.hpp"
#include "grouptest/rational.hpp"

namespace gt {

// Result of sampling the vertex-expansion property of a codeword graph:
// a subset of 2^k inputs passes when its rows cover at least
// (1 - eps) * 2^k * T distinct (seed, symbol) pairs.
struct ExpansionReport {
    std::uint64_t trials = 0;
    std::uint64_t passes = 0;
    bool exhaustive = false; // all subsets enumerated instead of sampled
    Rational pass_rate() const {
        return trials == 0 ? Rational(1) : Rational(static_cast<std::int64_t>(passes),
                                                    static_cast<std::int64_t>(trials));
    }
};

// Samples `trials` subsets of 2^k_bits distinct inputs (deterministically
// from `seed`; trial i draws from a stream derived from (seed, i)) and checks
// the expansion inequality on each.  When the total number of subsets
// C(N, 2^k) is at most exhaustive_cap, every subset is checked exactly once
// instead.  Requires 2^k_bits <= N and 0 <= eps < 1.
ExpansionReport sampled_expansion_check(const FunctionTable& f, unsigned k_bits,
                                        const Rational& eps, std::uint64_t trials,
                                        std::uint64_t seed,
                                        std::uint64_t exhaustive_cap = 100000);

} // namespace gt
