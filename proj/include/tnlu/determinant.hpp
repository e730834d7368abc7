#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <utility>
#include <vector>

#include "tnlu/error.hpp"
#include "tnlu/index_set.hpp"
#include "tnlu/matrix.hpp"
#include "tnlu/scalar.hpp"

namespace tnlu {

namespace detail {

/// Row-scaled integer copy of `a`: row i is multiplied by the lcm of its
/// denominators. `scale` receives the product of those multipliers.
inline std::vector<std::vector<Integer>> integer_lift(const Mat& a, Integer& scale) {
  std::vector<std::vector<Integer>> lifted(a.rows(), std::vector<Integer>(a.cols()));
  scale = 1;
  for (std::size_t i = 1; i <= a.rows(); ++i) {
    Integer den = 1;
    for (const auto& x : a.row(i)) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), x.get_den_mpz_t());
    for (std::size_t j = 1; j <= a.cols(); ++j) {
      const Scalar& x = a(i, j);
      lifted[i - 1][j - 1] = x.get_num() * (den / x.get_den());
    }
    scale *= den;
  }
  return lifted;
}

/// Fraction-free (Bareiss) elimination in place. Returns the rank; for a
/// square full-rank input, `det` receives the determinant (with row-swap sign).
inline std::size_t bareiss(std::vector<std::vector<Integer>>& m, std::size_t cols, Integer* det) {
  const std::size_t rows = m.size();
  Integer prev = 1;
  int sign = 1;
  std::size_t rank = 0;
  for (std::size_t col = 0; col < cols && rank < rows; ++col) {
    std::size_t pivot = rank;
    while (pivot < rows && m[pivot][col] == 0) ++pivot;
    if (pivot == rows) continue;
    if (pivot != rank) {
      std::swap(m[pivot], m[rank]);
      sign = -sign;
    }
    for (std::size_t i = rank + 1; i < rows; ++i) {
      for (std::size_t j = col + 1; j < cols; ++j) {
        m[i][j] = m[rank][col] * m[i][j] - m[i][col] * m[rank][j];
        mpz_divexact(m[i][j].get_mpz_t(), m[i][j].get_mpz_t(), prev.get_mpz_t());
      }
      m[i][col] = 0;
    }
    prev = m[rank][col];
    ++rank;
  }
  if (det != nullptr) *det = (rank == rows && rows == cols) ? Integer(sign * prev) : Integer(0);
  return rank;
}

}  // namespace detail

/// Exact determinant of a square matrix; the 0x0 determinant is 1.
inline Scalar determinant(const Mat& a) {
  detail::require(a.square(), "determinant of non-square " + a.shape() + " matrix");
  if (a.rows() == 0) return 1;
  Integer scale;
  auto lifted = detail::integer_lift(a, scale);
  Integer det;
  detail::bareiss(lifted, a.cols(), &det);
  Scalar out(det, scale);
  out.canonicalize();
  return out;
}

/// [I|J]_A. Equals 1 when I = J = {}.
inline Scalar minor(const Mat& a, const IndexSet& rows, const IndexSet& cols) {
  detail::require(rows.size() == cols.size(),
                  "minor needs |I| = |J|, got " + rows.to_string() + " and " + cols.to_string());
  return determinant(submatrix(a, rows, cols));
}

inline std::size_t rank(const Mat& a) {
  if (a.rows() == 0 || a.cols() == 0) return 0;
  Integer scale;
  auto lifted = detail::integer_lift(a, scale);
  return detail::bareiss(lifted, a.cols(), nullptr);
}

namespace detail {

/// Colex rank of a k-subset of {0..63} given as a bitmask.
inline std::size_t subset_rank(std::uint64_t mask, const std::vector<std::vector<std::size_t>>& binom) {
  std::size_t r = 0, k = 0;
  while (mask != 0) {
    const auto bit = static_cast<std::size_t>(__builtin_ctzll(mask));
    ++k;
    r += binom[bit][k];
    mask &= mask - 1;
  }
  return r;
}

inline std::vector<std::vector<std::size_t>> binomial_table(std::size_t n) {
  std::vector<std::vector<std::size_t>> c(n + 1, std::vector<std::size_t>(n + 2, 0));
  for (std::size_t i = 0; i <= n; ++i) {
    c[i][0] = 1;
    for (std::size_t k = 1; k <= i; ++k) c[i][k] = c[i - 1][k - 1] + (k <= i - 1 ? c[i - 1][k] : 0);
  }
  return c;
}

inline std::uint64_t to_mask(const IndexSet& s) {
  std::uint64_t mask = 0;
  for (std::size_t i : s) mask |= std::uint64_t{1} << (i - 1);
  return mask;
}

}  // namespace detail

/// Visits every square minor [I|J]_A of order 1..max_order, ordered by order,
/// then I lexicographically, then J lexicographically. `visit(I, J, value)`
/// returns false to stop; the function then returns false.
///
/// Minors of order k are expanded along their first row from the stored
/// minors of order k-1, so each level costs O(k) products per minor.
template <class Visitor>
bool for_each_minor(const Mat& a, std::size_t max_order, Visitor&& visit) {
  const std::size_t m = a.rows(), n = a.cols();
  max_order = std::min({max_order, m, n});
  if (max_order == 0) return true;
  detail::require(m <= 64 && n <= 64, "minor enumeration supports at most 64 rows and columns");

  const auto binom = detail::binomial_table(std::max(m, n));
  const IndexSet row_universe = all_rows(a), col_universe = all_cols(a);

  std::vector<Scalar> previous;  // order k-1, indexed by colex ranks
  std::size_t previous_cols = 1;
  for (std::size_t k = 1; k <= max_order; ++k) {
    const std::vector<IndexSet> row_sets = subsets(row_universe, k);
    const std::vector<IndexSet> col_sets = subsets(col_universe, k);
    std::vector<Scalar> current(row_sets.size() * col_sets.size());
    for (const IndexSet& rows : row_sets) {
      const std::uint64_t rest_rows = detail::to_mask(rows) & ~(std::uint64_t{1} << (rows.front() - 1));
      const std::size_t rest_row_rank = detail::subset_rank(rest_rows, binom);
      const std::size_t row_rank = detail::subset_rank(detail::to_mask(rows), binom);
      for (const IndexSet& cols : col_sets) {
        Scalar value;
        if (k == 1) {
          value = a(rows.front(), cols.front());
        } else {
          const std::uint64_t col_mask = detail::to_mask(cols);
          for (std::size_t l = 0; l < k; ++l) {
            const Scalar& pivot = a(rows.front(), cols[l]);
            if (sgn(pivot) == 0) continue;
            const std::uint64_t rest_cols = col_mask & ~(std::uint64_t{1} << (cols[l] - 1));
            const Scalar& cofactor = previous[rest_row_rank * previous_cols + detail::subset_rank(rest_cols, binom)];
            if (l % 2 == 0)
              value += pivot * cofactor;
            else
              value -= pivot * cofactor;
          }
        }
        current[row_rank * col_sets.size() + detail::subset_rank(detail::to_mask(cols), binom)] = value;
        if (!std::invoke(visit, rows, cols, value)) return false;
      }
    }
    previous = std::move(current);
    previous_cols = col_sets.size();
  }
  return true;
}

}  // namespace tnlu
