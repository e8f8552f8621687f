#pragma once

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <utility>
#include <vector>

#include "graver/bigint.hpp"
#include "graver/errors.hpp"

namespace graver {

/// Dense row-major matrix over an exact scalar type.
template <class T>
class basic_matrix {
 public:
  using value_type = T;

  basic_matrix() = default;
  basic_matrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), entries_(rows * cols, T(0)) {}
  basic_matrix(std::size_t rows, std::size_t cols, std::vector<T> entries)
      : rows_(rows), cols_(cols), entries_(std::move(entries)) {
    if (entries_.size() != rows_ * cols_) {
      throw DimensionMismatch("matrix entry count does not equal rows*cols");
    }
  }

  /// Builds from nested rows; all rows must share a length.
  static basic_matrix from_rows(const std::vector<std::vector<T>>& rows) {
    const std::size_t r = rows.size();
    const std::size_t c = r == 0 ? 0 : rows.front().size();
    std::vector<T> flat;
    flat.reserve(r * c);
    for (const auto& row : rows) {
      if (row.size() != c) throw DimensionMismatch("ragged matrix rows");
      flat.insert(flat.end(), row.begin(), row.end());
    }
    return basic_matrix(r, c, std::move(flat));
  }

  static basic_matrix from_rows(
      std::initializer_list<std::initializer_list<long long>> rows) {
    std::vector<std::vector<T>> nested;
    for (const auto& row : rows) {
      nested.emplace_back(row.begin(), row.end());
    }
    return from_rows(nested);
  }

  static basic_matrix identity(std::size_t n) {
    basic_matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  /// Matrix whose j-th column is columns[j]; every column has length `height`.
  static basic_matrix from_columns(std::size_t height,
                                   const std::vector<std::vector<T>>& columns) {
    basic_matrix m(height, columns.size());
    for (std::size_t j = 0; j < columns.size(); ++j) {
      if (columns[j].size() != height) {
        throw DimensionMismatch("column length differs from matrix height");
      }
      for (std::size_t i = 0; i < height; ++i) m(i, j) = columns[j][i];
    }
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  T& operator()(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const {
    return entries_[i * cols_ + j];
  }

  std::span<const T> row(std::size_t i) const {
    return {entries_.data() + i * cols_, cols_};
  }
  std::vector<T> column(std::size_t j) const {
    std::vector<T> c(rows_);
    for (std::size_t i = 0; i < rows_; ++i) c[i] = (*this)(i, j);
    return c;
  }

  const std::vector<T>& entries() const { return entries_; }

  basic_matrix transpose() const {
    basic_matrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  /// Submatrix keeping the given columns in the given order.
  basic_matrix select_columns(std::span<const std::size_t> keep) const {
    basic_matrix s(rows_, keep.size());
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t k = 0; k < keep.size(); ++k) s(i, k) = (*this)(i, keep[k]);
    return s;
  }

  std::vector<T> multiply(std::span<const T> x) const {
    if (x.size() != cols_) throw DimensionMismatch("matrix-vector size mismatch");
    std::vector<T> y(rows_, T(0));
    for (std::size_t i = 0; i < rows_; ++i) {
      T acc = 0;
      for (std::size_t j = 0; j < cols_; ++j) {
        if ((*this)(i, j) != 0 && x[j] != 0) acc += (*this)(i, j) * x[j];
      }
      y[i] = std::move(acc);
    }
    return y;
  }

  bool is_zero() const {
    return std::all_of(entries_.begin(), entries_.end(),
                       [](const T& v) { return v == 0; });
  }

  friend bool operator==(const basic_matrix&, const basic_matrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> entries_;
};

using IntMatrix = basic_matrix<BigInt>;

}  // namespace graver
