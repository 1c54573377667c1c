#pragma once

#include <cstdint>
#include <vector>

namespace gt {

// Explicit table for a function f : {0,1}^n x {0,1}^t -> {0,1}^l.  Inputs and
// seeds are plain integers below 2^n and 2^t; outputs are symbols below 2^l.
class FunctionTable {
public:
    FunctionTable() = default;

    // entries[x * T + s] = f(x, s); every entry must be < 2^l_bits.
    FunctionTable(unsigned n_bits, unsigned t_bits, unsigned l_bits,
                  std::vector<std::uint32_t> entries);

    unsigned n_bits() const { return n_bits_; }
    unsigned t_bits() const { return t_bits_; }
    unsigned l_bits() const { return l_bits_; }

    std::uint64_t inputs() const { return std::uint64_t{1} << n_bits_; }  // N
    std::uint64_t seeds() const { return std::uint64_t{1} << t_bits_; }   // T
    std::uint64_t alphabet() const { return std::uint64_t{1} << l_bits_; } // L

    std::uint32_t lookup(std::uint64_t x, std::uint64_t seed) const;

    const std::vector<std::uint32_t>& entries() const { return entries_; }

private:
    unsigned n_bits_ = 0;
    unsigned t_bits_ = 0;
    unsigned l_bits_ = 0;
    std::vector<std::uint32_t> entries_;
};

// Default cap on 2^(n+t) table entries; random_function and the planners
// refuse parameter sets whose tables would not fit.
inline constexpr std::uint64_t kDefaultTableEntryBudget = std::uint64_t{1} << 24;

// Table with every entry drawn independently and uniformly from [0, 2^l),
// from a stream fully determined by `seed`.  Requires n, t, l >= 1.
FunctionTable random_function(unsigned n_bits, unsigned t_bits, unsigned l_bits,
                              std::uint64_t seed,
                              std::uint64_t max_table_entries = kDefaultTableEntryBudget);

} // namespace gt
