#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "tnlu/error.hpp"
#include "tnlu/index_set.hpp"
#include "tnlu/scalar.hpp"

namespace tnlu {

/// Dense rows x cols matrix of exact rationals, row-major. Either dimension may
/// be zero. Element access is 1-based.
class Mat {
 public:
  Mat() = default;
  Mat(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), entries_(rows * cols) {}
  Mat(std::size_t rows, std::size_t cols, std::vector<Scalar> entries)
      : rows_(rows), cols_(cols), entries_(std::move(entries)) {
    detail::require(entries_.size() == rows_ * cols_, "entry count does not match " + shape());
  }
  /// Row-wise literal, e.g. Mat{{0, 1}, {1, 1}}. All rows must have equal length.
  Mat(std::initializer_list<std::initializer_list<Scalar>> rows) : rows_(rows.size()) {
    cols_ = rows.size() == 0 ? 0 : rows.begin()->size();
    entries_.reserve(rows_ * cols_);
    for (const auto& row : rows) {
      detail::require(row.size() == cols_, "ragged matrix literal");
      entries_.insert(entries_.end(), row.begin(), row.end());
    }
  }

  static Mat zero(std::size_t rows, std::size_t cols) { return Mat(rows, cols); }
  static Mat identity(std::size_t n) { return identity(n, n); }
  /// Ones at (i,i) for i <= min(rows, cols), zeros elsewhere.
  static Mat identity(std::size_t rows, std::size_t cols) {
    Mat out(rows, cols);
    for (std::size_t i = 1; i <= rows && i <= cols; ++i) out(i, i) = 1;
    return out;
  }

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool square() const noexcept { return rows_ == cols_; }
  std::string shape() const { return std::to_string(rows_) + "x" + std::to_string(cols_); }

  const Scalar& operator()(std::size_t i, std::size_t j) const { return entries_[offset(i, j)]; }
  Scalar& operator()(std::size_t i, std::size_t j) { return entries_[offset(i, j)]; }

  std::span<const Scalar> row(std::size_t i) const {
    detail::require(i >= 1 && i <= rows_, "row " + std::to_string(i) + " out of range for " + shape());
    return {entries_.data() + (i - 1) * cols_, cols_};
  }
  const std::vector<Scalar>& entries() const noexcept { return entries_; }

  bool row_is_zero(std::size_t i) const {
    for (const auto& x : row(i))
      if (sgn(x) != 0) return false;
    return true;
  }
  bool col_is_zero(std::size_t j) const {
    for (std::size_t i = 1; i <= rows_; ++i)
      if (sgn((*this)(i, j)) != 0) return false;
    return true;
  }
  bool is_zero() const {
    for (const auto& x : entries_)
      if (sgn(x) != 0) return false;
    return true;
  }

  Mat transpose() const {
    Mat out(cols_, rows_);
    for (std::size_t i = 1; i <= rows_; ++i)
      for (std::size_t j = 1; j <= cols_; ++j) out(j, i) = (*this)(i, j);
    return out;
  }

  friend bool operator==(const Mat& a, const Mat& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.entries_ == b.entries_;
  }

 private:
  std::size_t offset(std::size_t i, std::size_t j) const {
    detail::require(i >= 1 && i <= rows_ && j >= 1 && j <= cols_,
                    "entry (" + std::to_string(i) + "," + std::to_string(j) + ") out of range for " + shape());
    return (i - 1) * cols_ + (j - 1);
  }

  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Scalar> entries_;
};

inline IndexSet all_rows(const Mat& a) { return IndexSet::range(1, a.rows()); }
inline IndexSet all_cols(const Mat& a) { return IndexSet::range(1, a.cols()); }

/// A(I, J): entry (k, l) is A(i_k, j_l).
inline Mat submatrix(const Mat& a, const IndexSet& rows, const IndexSet& cols) {
  detail::require(rows.within(a.rows()), "row set " + rows.to_string() + " out of range for " + a.shape());
  detail::require(cols.within(a.cols()), "column set " + cols.to_string() + " out of range for " + a.shape());
  Mat out(rows.size(), cols.size());
  for (std::size_t k = 0; k < rows.size(); ++k)
    for (std::size_t l = 0; l < cols.size(); ++l) out(k + 1, l + 1) = a(rows[k], cols[l]);
  return out;
}

inline Mat delete_row(const Mat& a, std::size_t i) {
  detail::require(i >= 1 && i <= a.rows(), "delete_row: row " + std::to_string(i) + " out of range for " + a.shape());
  return submatrix(a, all_rows(a).without(i), all_cols(a));
}

inline Mat delete_col(const Mat& a, std::size_t j) {
  detail::require(j >= 1 && j <= a.cols(), "delete_col: column " + std::to_string(j) + " out of range for " + a.shape());
  return submatrix(a, all_rows(a), all_cols(a).without(j));
}

/// Exact product. A zero inner dimension yields the zero matrix.
inline Mat matmul(const Mat& a, const Mat& b) {
  detail::require(a.cols() == b.rows(), "matmul shape mismatch: " + a.shape() + " times " + b.shape());
  Mat out(a.rows(), b.cols());
  for (std::size_t i = 1; i <= a.rows(); ++i)
    for (std::size_t k = 1; k <= a.cols(); ++k) {
      const Scalar& aik = a(i, k);
      if (sgn(aik) == 0) continue;
      for (std::size_t j = 1; j <= b.cols(); ++j) out(i, j) += aik * b(k, j);
    }
  return out;
}

inline Mat operator*(const Mat& a, const Mat& b) { return matmul(a, b); }

}  // namespace tnlu
