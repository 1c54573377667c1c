#include "grouptest/bit_matrix.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "grouptest/errors.hpp"

namespace gt {

BitMatrix::BitMatrix(std::uint64_t rows, std::uint64_t cols,
                     std::vector<std::vector<std::uint32_t>> row_lists)
    : rows_(rows), cols_(cols) {
    if (row_lists.size() != rows)
        throw std::invalid_argument("matrix: got " + std::to_string(row_lists.size()) +
                                    " row lists for " + std::to_string(rows) + " rows");
    row_offsets_.reserve(rows + 1);
    row_offsets_.push_back(0);
    std::uint64_t total = 0;
    for (auto& list : row_lists) total += list.size();
    row_data_.reserve(total);
    for (auto& list : row_lists) {
        std::sort(list.begin(), list.end());
        list.erase(std::unique(list.begin(), list.end()), list.end());
        if (!list.empty() && list.back() >= cols_)
            throw std::invalid_argument("matrix: column index " + std::to_string(list.back()) +
                                        " out of range for " + std::to_string(cols_) + " columns");
        row_data_.insert(row_data_.end(), list.begin(), list.end());
        row_offsets_.push_back(row_data_.size());
    }
}

BitMatrix::BitMatrix(const BitMatrix& other)
    : rows_(other.rows_), cols_(other.cols_),
      row_offsets_(other.row_offsets_), row_data_(other.row_data_) {
    std::lock_guard<std::mutex> lock(other.column_mutex_);
    column_view_ = other.column_view_;
}

BitMatrix::BitMatrix(BitMatrix&& other) noexcept
    : rows_(other.rows_), cols_(other.cols_),
      row_offsets_(std::move(other.row_offsets_)), row_data_(std::move(other.row_data_)) {
    column_view_ = std::move(other.column_view_);
    other.rows_ = other.cols_ = 0;
}

BitMatrix& BitMatrix::operator=(const BitMatrix& other) {
    if (this != &other) {
        BitMatrix tmp(other);
        *this = std::move(tmp);
    }
    return *this;
}

BitMatrix& BitMatrix::operator=(BitMatrix&& other) noexcept {
    if (this != &other) {
        rows_ = other.rows_;
        cols_ = other.cols_;
        row_offsets_ = std::move(other.row_offsets_);
        row_data_ = std::move(other.row_data_);
        column_view_ = std::move(other.column_view_);
        other.rows_ = other.cols_ = 0;
    }
    return *this;
}

BitMatrix BitMatrix::identity(std::uint64_t n) {
    std::vector<std::vector<std::uint32_t>> rows(n);
    for (std::uint64_t i = 0; i < n; ++i) rows[i] = {static_cast<std::uint32_t>(i)};
    return BitMatrix(n, n, std::move(rows));
}

std::span<const std::uint32_t> BitMatrix::row(std::uint64_t i) const {
    if (i >= rows_) throw std::out_of_range("matrix: row index out of range");
    return {row_data_.data() + row_offsets_[i],
            static_cast<std::size_t>(row_offsets_[i + 1] - row_offsets_[i])};
}

std::uint64_t BitMatrix::row_weight(std::uint64_t i) const { return row(i).size(); }

const BitMatrix::ColumnView& BitMatrix::columns() const {
    std::lock_guard<std::mutex> lock(column_mutex_);
    if (!column_view_) {
        auto view = std::make_shared<ColumnView>();
        std::vector<std::uint64_t> weights(cols_, 0);
        for (std::uint32_t c : row_data_) ++weights[c];
        view->offsets.assign(cols_ + 1, 0);
        for (std::uint64_t j = 0; j < cols_; ++j)
            view->offsets[j + 1] = view->offsets[j] + weights[j];
        view->data.resize(row_data_.size());
        std::vector<std::uint64_t> cursor(view->offsets.begin(), view->offsets.end() - 1);
        for (std::uint64_t i = 0; i < rows_; ++i)
            for (std::uint64_t p = row_offsets_[i]; p < row_offsets_[i + 1]; ++p)
                view->data[cursor[row_data_[p]]++] = static_cast<std::uint32_t>(i);
        column_view_ = std::move(view);
    }
    return *column_view_;
}

std::span<const std::uint32_t> BitMatrix::column(std::uint64_t j) const {
    if (j >= cols_) throw std::out_of_range("matrix: column index out of range");
    const ColumnView& view = columns();
    return {view.data.data() + view.offsets[j],
            static_cast<std::size_t>(view.offsets[j + 1] - view.offsets[j])};
}

std::uint64_t BitMatrix::column_weight(std::uint64_t j) const { return column(j).size(); }

bool BitMatrix::get(std::uint64_t i, std::uint64_t j) const {
    auto r = row(i);
    return std::binary_search(r.begin(), r.end(), static_cast<std::uint32_t>(j));
}

BitVec encode(const BitMatrix& A, const SupportSet& x) {
    if (x.universe() != A.cols())
        throw DimensionMismatch("encode: support universe " + std::to_string(x.universe()) +
                                " != matrix columns " + std::to_string(A.cols()));
    BitVec y(A.rows());
    for (std::uint32_t c : x.indices())
        for (std::uint32_t r : A.column(c)) y.set(r);
    return y;
}

} // namespace gt
