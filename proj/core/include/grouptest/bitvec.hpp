#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace gt {

// Fixed-length bit vector packed into 64-bit words.  Bits past size() in the
// last word are kept zero so word-level counts and comparisons are exact.
class BitVec {
public:
    BitVec() = default;
    explicit BitVec(std::size_t size) : size_(size), words_((size + 63) / 64, 0) {}

    // Builds from a string of '0'/'1' characters, index 0 first.
    static BitVec from_string(const std::string& bits);

    std::size_t size() const { return size_; }

    bool get(std::size_t i) const;
    void set(std::size_t i, bool value = true);

    // Number of set bits.
    std::uint64_t count() const;

    const std::vector<std::uint64_t>& words() const { return words_; }

    friend bool operator==(const BitVec& a, const BitVec& b) {
        return a.size_ == b.size_ && a.words_ == b.words_;
    }
    friend bool operator!=(const BitVec& a, const BitVec& b) { return !(a == b); }

    // Bitwise OR; sizes must match.
    BitVec operator|(const BitVec& other) const;
    BitVec& operator|=(const BitVec& other);

    std::string str() const;

private:
    std::size_t size_ = 0;
    std::vector<std::uint64_t> words_;
};

// Per-trial noise allowance: at most e0 flips 0->1 and e1 flips 1->0.
struct NoiseBudget {
    std::uint64_t e0 = 0;
    std::uint64_t e1 = 0;
};

// Accuracy allowances on the recovered vector reuse the same shape.
using AccuracyBudget = NoiseBudget;

// (n01, n10): positions where a=0,b=1 and where a=1,b=0.  Throws
// DimensionMismatch when sizes differ.
std::pair<std::uint64_t, std::uint64_t> closeness_deltas(const BitVec& a, const BitVec& b);

// b is within budget of a: at most budget.e0 flips 0->1 and budget.e1 flips
// 1->0 turn a into b.
bool is_close(const BitVec& a, const BitVec& b, const NoiseBudget& budget);

} // namespace gt
