#include "grouptest/bitvec.hpp"

#include <bit>
#include <stdexcept>

#include "grouptest/errors.hpp"

namespace gt {

BitVec BitVec::from_string(const std::string& bits) {
    BitVec v(bits.size());
    for (std::size_t i = 0; i < bits.size(); ++i) {
        char c = bits[i];
        if (c == '1')
            v.set(i);
        else if (c != '0')
            throw std::invalid_argument("bitvec: expected '0' or '1', got '" + std::string(1, c) + "'");
    }
    return v;
}

bool BitVec::get(std::size_t i) const {
    if (i >= size_) throw std::out_of_range("bitvec: index out of range");
    return (words_[i >> 6] >> (i & 63)) & 1;
}

void BitVec::set(std::size_t i, bool value) {
    if (i >= size_) throw std::out_of_range("bitvec: index out of range");
    std::uint64_t mask = std::uint64_t{1} << (i & 63);
    if (value)
        words_[i >> 6] |= mask;
    else
        words_[i >> 6] &= ~mask;
}

std::uint64_t BitVec::count() const {
    std::uint64_t total = 0;
    for (std::uint64_t w : words_) total += static_cast<std::uint64_t>(std::popcount(w));
    return total;
}

BitVec BitVec::operator|(const BitVec& other) const {
    BitVec out = *this;
    out |= other;
    return out;
}

BitVec& BitVec::operator|=(const BitVec& other) {
    if (size_ != other.size_) throw DimensionMismatch("bitvec: OR of different lengths");
    for (std::size_t w = 0; w < words_.size(); ++w) words_[w] |= other.words_[w];
    return *this;
}

std::string BitVec::str() const {
    std::string s(size_, '0');
    for (std::size_t i = 0; i < size_; ++i)
        if (get(i)) s[i] = '1';
    return s;
}

std::pair<std::uint64_t, std::uint64_t> closeness_deltas(const BitVec& a, const BitVec& b) {
    if (a.size() != b.size()) throw DimensionMismatch("closeness: vectors differ in length");
    std::uint64_t n01 = 0, n10 = 0;
    const auto& wa = a.words();
    const auto& wb = b.words();
    for (std::size_t w = 0; w < wa.size(); ++w) {
        n01 += static_cast<std::uint64_t>(std::popcount(~wa[w] & wb[w]));
        n10 += static_cast<std::uint64_t>(std::popcount(wa[w] & ~wb[w]));
    }
    // Trailing bits past size() are zero in both vectors, so the complements
    // above cannot contribute stray counts.
    return {n01, n10};
}

bool is_close(const BitVec& a, const BitVec& b, const NoiseBudget& budget) {
    auto [n01, n10] = closeness_deltas(a, b);
    return n01 <= budget.e0 && n10 <= budget.e1;
}

} // namespace gt
