#include "grouptest/induced_code.hpp"

#include <stdexcept>

namespace gt {

InducedCode::InducedCode(std::shared_ptr<const FunctionTable> table) : table_(std::move(table)) {
    if (!table_) throw std::invalid_argument("induced code: null table");
}

std::vector<std::uint32_t> InducedCode::codeword(std::uint64_t x) const {
    const std::uint64_t T = block_length();
    std::vector<std::uint32_t> word(T);
    for (std::uint64_t i = 0; i < T; ++i) word[i] = table_->lookup(x, i);
    return word;
}

InducedCode induced_code(FunctionTable table) {
    return InducedCode(std::make_shared<const FunctionTable>(std::move(table)));
}

BitMatrix codeword_graph_matrix(const InducedCode& code) {
    const std::uint64_t N = code.num_codewords();
    const std::uint64_t T = code.block_length();
    const std::uint64_t L = code.alphabet();
    std::vector<std::vector<std::uint32_t>> rows(T * L);
    // Walking codewords in ascending order leaves every row list sorted.
    for (std::uint64_t x = 0; x < N; ++x)
        for (std::uint64_t i = 0; i < T; ++i)
            rows[i * L + code.symbol(x, i)].push_back(static_cast<std::uint32_t>(x));
    return BitMatrix(T * L, N, std::move(rows));
}

} // namespace gt
