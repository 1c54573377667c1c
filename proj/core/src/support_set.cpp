#include "grouptest/support_set.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "grouptest/errors.hpp"

namespace gt {

SupportSet::SupportSet(std::uint64_t universe, std::vector<std::uint32_t> indices)
    : universe_(universe), indices_(std::move(indices)) {
    std::sort(indices_.begin(), indices_.end());
    indices_.erase(std::unique(indices_.begin(), indices_.end()), indices_.end());
    if (!indices_.empty() && indices_.back() >= universe_)
        throw std::invalid_argument("support: index " + std::to_string(indices_.back()) +
                                    " outside universe of size " + std::to_string(universe_));
}

bool SupportSet::contains(std::uint32_t index) const {
    return std::binary_search(indices_.begin(), indices_.end(), index);
}

bool SupportSet::is_subset_of(const SupportSet& other) const {
    if (universe_ != other.universe_) throw DimensionMismatch("support: universes differ");
    return std::includes(other.indices_.begin(), other.indices_.end(),
                         indices_.begin(), indices_.end());
}

std::uint64_t SupportSet::difference_size(const SupportSet& other) const {
    if (universe_ != other.universe_) throw DimensionMismatch("support: universes differ");
    std::uint64_t n = 0;
    auto it = other.indices_.begin();
    for (std::uint32_t v : indices_) {
        while (it != other.indices_.end() && *it < v) ++it;
        if (it == other.indices_.end() || *it != v) ++n;
    }
    return n;
}

SupportSet SupportSet::union_with(const SupportSet& other) const {
    if (universe_ != other.universe_) throw DimensionMismatch("support: universes differ");
    std::vector<std::uint32_t> merged;
    merged.reserve(indices_.size() + other.indices_.size());
    std::set_union(indices_.begin(), indices_.end(),
                   other.indices_.begin(), other.indices_.end(), std::back_inserter(merged));
    SupportSet out(universe_);
    out.indices_ = std::move(merged);
    return out;
}

} // namespace gt
