#include "grouptest/decode.hpp"

#include <string>

namespace gt {

DecodeResult threshold_decode(const BitMatrix& A, const BitVec& y_hat, std::uint64_t T,
                              const Rational& nu_over_gamma) {
    if (y_hat.size() != A.rows())
        throw DimensionMismatch("decode: observation length " + std::to_string(y_hat.size()) +
                                " != matrix rows " + std::to_string(A.rows()));
    if (nu_over_gamma < Rational(0) || !(nu_over_gamma < Rational(1)))
        throw std::invalid_argument("decode: nu/gamma must lie in [0, 1)");
    for (std::uint64_t c = 0; c < A.cols(); ++c)
        if (A.column_weight(c) != T)
            throw ColumnWeightError("decode: column " + std::to_string(c) + " has weight " +
                                    std::to_string(A.column_weight(c)) + ", expected " +
                                    std::to_string(T));

    DecodeResult result;
    result.block_length = T;
    result.nu_over_gamma = nu_over_gamma;
    // Smallest count c with c/T >= 1 - nu/gamma, exact.
    const __int128 num =
        static_cast<__int128>(T) * (nu_over_gamma.den() - nu_over_gamma.num());
    result.threshold_count =
        static_cast<std::uint64_t>((num + nu_over_gamma.den() - 1) / nu_over_gamma.den());

    // Touch each 1-entry of an active row once.
    result.scores.assign(A.cols(), 0);
    for (std::uint64_t r = 0; r < A.rows(); ++r)
        if (y_hat.get(r))
            for (std::uint32_t c : A.row(r)) ++result.scores[c];

    std::vector<std::uint32_t> hits;
    for (std::uint64_t c = 0; c < A.cols(); ++c)
        if (result.scores[c] >= result.threshold_count)
            hits.push_back(static_cast<std::uint32_t>(c));
    result.support = SupportSet(A.cols(), std::move(hits));
    return result;
}

DoublingResult decode_with_doubling(
    const std::function<DoublingRound(std::uint64_t)>& round,
    const std::function<BitVec(std::uint64_t, const BitMatrix&)>& observe,
    const std::function<std::uint64_t(std::uint64_t)>& weight_cap,
    std::uint64_t universe) {
    DoublingResult out;
    std::uint64_t guess = 1;
    for (;;) {
        DoublingRound setup = round(guess);
        BitVec y_hat = observe(guess, setup.matrix);
        ++out.rounds;
        out.total_measurements += setup.matrix.rows();
        DecodeResult decoded =
            threshold_decode(setup.matrix, y_hat, setup.block_length, setup.nu_over_gamma);
        if (decoded.support.weight() <= weight_cap(guess)) {
            out.result = std::move(decoded);
            out.guess = guess;
            return out;
        }
        if (guess >= universe)
            throw CapExceeded("doubling: no sparsity guess up to " + std::to_string(universe) +
                              " produced a plausible reconstruction");
        guess = std::min(guess * 2, universe);
    }
}

std::vector<SupportSet> oracle_decode_exhaustive(const BitMatrix& A, const BitVec& y_hat,
                                                 std::uint64_t d, const NoiseBudget& budget,
                                                 std::uint64_t cap) {
    if (y_hat.size() != A.rows())
        throw DimensionMismatch("oracle: observation length != matrix rows");
    if (cap == 0) cap = default_enum_cap();

    // Candidate count sum_{i<=d} C(N, i) must stay within the cap.
    const std::uint64_t N = A.cols();
    {
        unsigned __int128 total = 1, c = 1;
        for (std::uint64_t i = 1; i <= std::min(d, N); ++i) {
            c = c * (N - i + 1) / i;
            total += c;
            if (total > cap)
                throw CapExceeded("oracle: candidate supports exceed cap of " +
                                  std::to_string(cap));
        }
    }

    std::vector<SupportSet> consistent;
    std::vector<std::uint32_t> chosen;
    // DFS over supports in lexicographic order, extending the encoded union
    // one column at a time.
    std::vector<BitVec> stack;
    stack.reserve(d + 1);
    stack.push_back(BitVec(A.rows()));

    auto check_current = [&]() {
        if (is_close(stack.back(), y_hat, budget))
            consistent.emplace_back(N, chosen);
    };

    std::function<void(std::uint64_t)> descend = [&](std::uint64_t first) {
        if (chosen.size() == d) return;
        for (std::uint64_t c = first; c < N; ++c) {
            BitVec next = stack.back();
            for (std::uint32_t r : A.column(c)) next.set(r);
            stack.push_back(std::move(next));
            chosen.push_back(static_cast<std::uint32_t>(c));
            check_current();
            descend(c + 1);
            chosen.pop_back();
            stack.pop_back();
        }
    };

    check_current(); // the empty support
    descend(0);
    return consistent;
}

} // namespace gt
