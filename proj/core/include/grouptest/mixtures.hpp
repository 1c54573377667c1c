#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "grouptest/bitvec.hpp"
#include "grouptest/induced_code.hpp"
#include "grouptest/rational.hpp"

namespace gt {

// A mixture S = (S_0, ..., S_{T-1}) of symbol subsets over the alphabet
// [0, L).  Coordinates may be empty or full.  Packed one bitset per
// coordinate; wgt (the total number of symbols present) is kept incrementally.
class Mixture {
public:
    Mixture() = default;
    Mixture(std::uint64_t block_length, std::uint64_t alphabet);

    std::uint64_t block_length() const { return T_; }
    std::uint64_t alphabet() const { return L_; }

    bool contains(std::uint64_t coordinate, std::uint32_t symbol) const;
    void add(std::uint64_t coordinate, std::uint32_t symbol);

    std::uint64_t coord_size(std::uint64_t coordinate) const;

    // Total symbol count wgt(S) and the density rho(S) = wgt / (T*L).
    std::uint64_t wgt() const { return wgt_; }
    Rational rho() const;

private:
    std::uint64_t T_ = 0;
    std::uint64_t L_ = 0;
    std::uint64_t words_per_coord_ = 0;
    std::uint64_t wgt_ = 0;
    std::vector<std::uint64_t> bits_;
};

// Interprets an observation over the codeword-graph row layout (row i*L + j)
// as a mixture: symbol j is in S_i iff bit i*L + j is set.  The observation
// length must be exactly T*L.
Mixture mixture_from_observation(const BitVec& y, std::uint64_t block_length,
                                 std::uint64_t alphabet);

// Agr(w, S) = |{i : w_i in S_i}| / T, exact.  The word length must equal the
// mixture block length, every symbol must be < L.
Rational agreement(const std::vector<std::uint32_t>& word, const Mixture& S);

// Same without materializing the codeword.
Rational agreement(const InducedCode& code, std::uint64_t codeword, const Mixture& S);

// Codewords whose agreement clears alpha, ascending.  At alpha = 1 the list
// is the full-agreement set; below 1 membership is Agr > alpha when strict
// (the list semantics), Agr >= alpha otherwise.  Requires 0 <= alpha <= 1 and
// matching block length/alphabet.
std::vector<std::uint32_t> agreement_list(const InducedCode& code, const Mixture& S,
                                          const Rational& alpha, bool strict = true);

// One check_list_bound run: for each sampled mixture the agreement list at
// threshold rho(S) * L/K' + eps must have fewer than 2^k entries.  Samples
// whose threshold exceeds 1 are vacuous and only counted.
struct ListBoundReport {
    std::uint64_t samples = 0;
    std::uint64_t vacuous = 0;
    std::uint64_t violations = 0;
    std::uint64_t max_list_size = 0;
    std::uint64_t bound = 0; // 2^k
};

ListBoundReport check_list_bound(const InducedCode& code, unsigned k_bits,
                                 unsigned k_prime_bits, const Rational& eps,
                                 const std::function<Mixture(std::uint64_t)>& sampler,
                                 std::uint64_t trials);

} // namespace gt
