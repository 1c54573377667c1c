#include "grouptest/function_table.hpp"

#include <random>
#include <stdexcept>
#include <string>

namespace gt {

FunctionTable::FunctionTable(unsigned n_bits, unsigned t_bits, unsigned l_bits,
                             std::vector<std::uint32_t> entries)
    : n_bits_(n_bits), t_bits_(t_bits), l_bits_(l_bits), entries_(std::move(entries)) {
    if (n_bits_ == 0 || n_bits_ > 32 || t_bits_ > 32 || l_bits_ == 0 || l_bits_ > 30)
        throw std::invalid_argument("function table: bit widths out of range");
    if (entries_.size() != inputs() * seeds())
        throw std::invalid_argument("function table: expected " +
                                    std::to_string(inputs() * seeds()) + " entries, got " +
                                    std::to_string(entries_.size()));
    const std::uint64_t L = alphabet();
    for (std::uint32_t v : entries_)
        if (v >= L) throw std::invalid_argument("function table: symbol out of alphabet");
}

std::uint32_t FunctionTable::lookup(std::uint64_t x, std::uint64_t seed) const {
    if (x >= inputs() || seed >= seeds())
        throw std::out_of_range("function table: argument out of range");
    return entries_[x * seeds() + seed];
}

FunctionTable random_function(unsigned n_bits, unsigned t_bits, unsigned l_bits,
                              std::uint64_t seed, std::uint64_t max_table_entries) {
    if (n_bits == 0 || t_bits == 0)
        throw std::invalid_argument("random function: input and seed widths must be >= 1");
    if (l_bits == 0)
        throw std::invalid_argument("random function: alphabet must have >= 2 symbols");
    if (n_bits > 32 || t_bits > 32 || l_bits > 30)
        throw std::invalid_argument("random function: bit widths out of range");
    if (n_bits + t_bits > 62)
        throw std::invalid_argument("random function: table size overflows");
    const std::uint64_t total = (std::uint64_t{1} << n_bits) * (std::uint64_t{1} << t_bits);
    if (total > max_table_entries)
        throw std::invalid_argument("random function: table of " + std::to_string(total) +
                                    " entries exceeds budget of " +
                                    std::to_string(max_table_entries));
    // L is a power of two, so masking the generator output is exactly uniform.
    const std::uint64_t mask = (std::uint64_t{1} << l_bits) - 1;
    std::mt19937_64 rng(seed);
    std::vector<std::uint32_t> entries(total);
    for (auto& e : entries) e = static_cast<std::uint32_t>(rng() & mask);
    return FunctionTable(n_bits, t_bits, l_bits, std::move(entries));
}

} // namespace gt
