#include "grouptest/mixtures.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <string>

#include "grouptest/errors.hpp"

namespace gt {

Mixture::Mixture(std::uint64_t block_length, std::uint64_t alphabet)
    : T_(block_length), L_(alphabet), words_per_coord_((alphabet + 63) / 64),
      bits_(block_length * words_per_coord_, 0) {
    if (T_ == 0 || L_ == 0) throw std::invalid_argument("mixture: empty block or alphabet");
}

bool Mixture::contains(std::uint64_t coordinate, std::uint32_t symbol) const {
    if (coordinate >= T_ || symbol >= L_)
        throw std::out_of_range("mixture: coordinate or symbol out of range");
    return (bits_[coordinate * words_per_coord_ + (symbol >> 6)] >> (symbol & 63)) & 1;
}

void Mixture::add(std::uint64_t coordinate, std::uint32_t symbol) {
    if (coordinate >= T_ || symbol >= L_)
        throw std::out_of_range("mixture: coordinate or symbol out of range");
    std::uint64_t& word = bits_[coordinate * words_per_coord_ + (symbol >> 6)];
    std::uint64_t mask = std::uint64_t{1} << (symbol & 63);
    if (!(word & mask)) {
        word |= mask;
        ++wgt_;
    }
}

std::uint64_t Mixture::coord_size(std::uint64_t coordinate) const {
    if (coordinate >= T_) throw std::out_of_range("mixture: coordinate out of range");
    std::uint64_t n = 0;
    for (std::uint64_t w = 0; w < words_per_coord_; ++w)
        n += static_cast<std::uint64_t>(
            std::popcount(bits_[coordinate * words_per_coord_ + w]));
    return n;
}

Rational Mixture::rho() const {
    return Rational(static_cast<std::int64_t>(wgt_), static_cast<std::int64_t>(T_ * L_));
}

Mixture mixture_from_observation(const BitVec& y, std::uint64_t block_length,
                                 std::uint64_t alphabet) {
    if (y.size() != block_length * alphabet)
        throw DimensionMismatch("mixture: observation length " + std::to_string(y.size()) +
                                " != T*L = " + std::to_string(block_length * alphabet));
    Mixture S(block_length, alphabet);
    for (std::uint64_t i = 0; i < block_length; ++i)
        for (std::uint64_t j = 0; j < alphabet; ++j)
            if (y.get(i * alphabet + j)) S.add(i, static_cast<std::uint32_t>(j));
    return S;
}

Rational agreement(const std::vector<std::uint32_t>& word, const Mixture& S) {
    if (word.size() != S.block_length())
        throw DimensionMismatch("agreement: word length != mixture block length");
    std::uint64_t hits = 0;
    for (std::uint64_t i = 0; i < word.size(); ++i)
        if (S.contains(i, word[i])) ++hits;
    return Rational(static_cast<std::int64_t>(hits),
                    static_cast<std::int64_t>(S.block_length()));
}

Rational agreement(const InducedCode& code, std::uint64_t codeword, const Mixture& S) {
    if (code.block_length() != S.block_length() || code.alphabet() != S.alphabet())
        throw DimensionMismatch("agreement: code and mixture shapes differ");
    std::uint64_t hits = 0;
    const std::uint64_t T = S.block_length();
    for (std::uint64_t i = 0; i < T; ++i)
        if (S.contains(i, code.symbol(codeword, i))) ++hits;
    return Rational(static_cast<std::int64_t>(hits), static_cast<std::int64_t>(T));
}

std::vector<std::uint32_t> agreement_list(const InducedCode& code, const Mixture& S,
                                          const Rational& alpha, bool strict) {
    if (alpha < Rational(0) || Rational(1) < alpha)
        throw std::invalid_argument("agreement list: alpha must lie in [0, 1]");
    if (code.block_length() != S.block_length() || code.alphabet() != S.alphabet())
        throw DimensionMismatch("agreement list: code and mixture shapes differ");

    const bool full_only = alpha == Rational(1);
    std::vector<std::uint32_t> out;
    const std::uint64_t N = code.num_codewords();
    for (std::uint64_t x = 0; x < N; ++x) {
        Rational a = agreement(code, x, S);
        bool in = full_only ? a == Rational(1) : (strict ? alpha < a : alpha <= a);
        if (in) out.push_back(static_cast<std::uint32_t>(x));
    }
    return out;
}

ListBoundReport check_list_bound(const InducedCode& code, unsigned k_bits,
                                 unsigned k_prime_bits, const Rational& eps,
                                 const std::function<Mixture(std::uint64_t)>& sampler,
                                 std::uint64_t trials) {
    if (!(Rational(0) < eps) || !(eps < Rational(1)))
        throw std::invalid_argument("list bound: eps must lie in (0, 1)");
    unsigned l_bits = 0;
    while ((std::uint64_t{1} << l_bits) < code.alphabet()) ++l_bits;
    if (k_prime_bits > l_bits)
        throw std::invalid_argument("list bound: k' exceeds the alphabet width");

    ListBoundReport report;
    report.bound = std::uint64_t{1} << k_bits;
    const Rational blowup(std::int64_t{1} << (l_bits - k_prime_bits)); // L / K'
    for (std::uint64_t t = 0; t < trials; ++t) {
        Mixture S = sampler(t);
        ++report.samples;
        Rational threshold = S.rho() * blowup + eps;
        if (Rational(1) < threshold) {
            ++report.vacuous;
            continue;
        }
        auto list = agreement_list(code, S, threshold, /*strict=*/true);
        report.max_list_size = std::max<std::uint64_t>(report.max_list_size, list.size());
        if (list.size() >= report.bound) ++report.violations;
    }
    return report;
}

} // namespace gt
