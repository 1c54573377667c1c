#pragma once

#include <cstdint>
#include <vector>

namespace gt {

// Sparse boolean vector over [0, universe): the sorted set of 1-positions.
class SupportSet {
public:
    SupportSet() = default;
    explicit SupportSet(std::uint64_t universe) : universe_(universe) {}

    // Indices are sorted and deduplicated; any index >= universe throws.
    SupportSet(std::uint64_t universe, std::vector<std::uint32_t> indices);

    std::uint64_t universe() const { return universe_; }
    const std::vector<std::uint32_t>& indices() const { return indices_; }
    std::uint64_t weight() const { return indices_.size(); }
    bool empty() const { return indices_.empty(); }

    bool contains(std::uint32_t index) const;

    // this ⊆ other (universes must match).
    bool is_subset_of(const SupportSet& other) const;

    // |this \ other| (universes must match).
    std::uint64_t difference_size(const SupportSet& other) const;

    SupportSet union_with(const SupportSet& other) const;

    friend bool operator==(const SupportSet& a, const SupportSet& b) {
        return a.universe_ == b.universe_ && a.indices_ == b.indices_;
    }
    friend bool operator!=(const SupportSet& a, const SupportSet& b) { return !(a == b); }

private:
    std::uint64_t universe_ = 0;
    std::vector<std::uint32_t> indices_;
};

} // namespace gt
