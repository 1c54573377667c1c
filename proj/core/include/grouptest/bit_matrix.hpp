#pragma once

#include <cstdint>
#include <memory>
#include <mutex>
#include <span>
#include <vector>

#include "grouptest/bitvec.hpp"
#include "grouptest/support_set.hpp"

namespace gt {

// Sparse boolean measurement matrix in compressed row form.  All builders
// produce sorted, duplicate-free rows; the entries are immutable afterwards,
// so sharing across threads is safe.  The packed column view is derived from
// the rows on first use and cached (decoders need per-column row lists).
class BitMatrix {
public:
    BitMatrix() = default;

    // row_lists[i] holds the column indices of row i; they are sorted and
    // deduplicated here, and any index >= cols throws.
    BitMatrix(std::uint64_t rows, std::uint64_t cols,
              std::vector<std::vector<std::uint32_t>> row_lists);

    BitMatrix(const BitMatrix& other);
    BitMatrix(BitMatrix&& other) noexcept;
    BitMatrix& operator=(const BitMatrix& other);
    BitMatrix& operator=(BitMatrix&& other) noexcept;

    static BitMatrix identity(std::uint64_t n);

    std::uint64_t rows() const { return rows_; }
    std::uint64_t cols() const { return cols_; }
    std::uint64_t ones() const { return row_data_.size(); }

    std::span<const std::uint32_t> row(std::uint64_t i) const;
    std::uint64_t row_weight(std::uint64_t i) const;

    std::span<const std::uint32_t> column(std::uint64_t j) const;
    std::uint64_t column_weight(std::uint64_t j) const;

    bool get(std::uint64_t i, std::uint64_t j) const;

    friend bool operator==(const BitMatrix& a, const BitMatrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ &&
               a.row_offsets_ == b.row_offsets_ && a.row_data_ == b.row_data_;
    }

private:
    struct ColumnView {
        std::vector<std::uint64_t> offsets; // cols + 1
        std::vector<std::uint32_t> data;    // row indices, ascending per column
    };

    const ColumnView& columns() const;

    std::uint64_t rows_ = 0;
    std::uint64_t cols_ = 0;
    std::vector<std::uint64_t> row_offsets_; // rows + 1
    std::vector<std::uint32_t> row_data_;

    mutable std::mutex column_mutex_;
    mutable std::shared_ptr<const ColumnView> column_view_;
};

// y = A[x]: OR of the columns selected by x.  x.universe() must equal A.cols().
BitVec encode(const BitMatrix& A, const SupportSet& x);

} // namespace gt
