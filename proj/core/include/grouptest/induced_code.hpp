#pragma once

#include <cstdint>
#include <memory>
#include <vector>

#include "grouptest/bit_matrix.hpp"
#include "grouptest/function_table.hpp"

namespace gt {

// Code induced by a function table: codeword x is (f(x, 0), ..., f(x, T-1)),
// one symbol per seed.  Block length T, alphabet size L, 2^n codewords.
// A thin view — the table is shared, not copied.
class InducedCode {
public:
    InducedCode() = default;
    explicit InducedCode(std::shared_ptr<const FunctionTable> table);

    std::uint64_t num_codewords() const { return table_->inputs(); }   // N
    std::uint64_t block_length() const { return table_->seeds(); }     // T
    std::uint64_t alphabet() const { return table_->alphabet(); }      // L

    std::uint32_t symbol(std::uint64_t codeword, std::uint64_t position) const {
        return table_->lookup(codeword, position);
    }

    std::vector<std::uint32_t> codeword(std::uint64_t x) const;

    const FunctionTable& table() const { return *table_; }

private:
    std::shared_ptr<const FunctionTable> table_;
};

InducedCode induced_code(FunctionTable table);

// Codeword graph adjacency matrix: T*L rows (row (i, j) linearized as i*L+j)
// by N columns; entry ((i,j), x) is 1 iff symbol i of codeword x equals j.
// Every column has weight exactly T.
BitMatrix codeword_graph_matrix(const InducedCode& code);

} // namespace gt
