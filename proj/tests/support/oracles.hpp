#pragma once

// Test-only reference implementations. None of these share code paths with
// the library routines they check.

#include <cstdint>
#include <vector>

#include "tnlu/tnlu.hpp"

namespace tnlu::oracle {

/// Determinant by cofactor expansion along the first row. Only for n <= 7.
inline Scalar cofactor_det(const std::vector<std::vector<Scalar>>& m) {
  const std::size_t n = m.size();
  if (n == 0) return 1;
  if (n == 1) return m[0][0];
  Scalar total;
  for (std::size_t col = 0; col < n; ++col) {
    if (sgn(m[0][col]) == 0) continue;
    std::vector<std::vector<Scalar>> rest;
    for (std::size_t r = 1; r < n; ++r) {
      std::vector<Scalar> row;
      for (std::size_t c = 0; c < n; ++c)
        if (c != col) row.push_back(m[r][c]);
      rest.push_back(std::move(row));
    }
    const Scalar term = m[0][col] * cofactor_det(rest);
    if (col % 2 == 0)
      total += term;
    else
      total -= term;
  }
  return total;
}

/// [I|J]_A by picking entries directly and expanding by cofactors.
inline Scalar pick_and_expand(const Mat& a, const std::vector<std::size_t>& rows, const std::vector<std::size_t>& cols) {
  std::vector<std::vector<Scalar>> m;
  for (std::size_t i : rows) {
    std::vector<Scalar> row;
    for (std::size_t j : cols) row.push_back(a(i, j));
    m.push_back(std::move(row));
  }
  return cofactor_det(m);
}

inline Scalar oracle_minor(const Mat& a, const IndexSet& rows, const IndexSet& cols) {
  return pick_and_expand(a, rows.values(), cols.values());
}

/// Rank as the largest order of a nonzero minor (cofactor oracle).
inline std::size_t oracle_rank(const Mat& a) {
  auto has_nonzero_minor = [&](std::size_t k) {
    for (const auto& rows : subsets(all_rows(a), k))
      for (const auto& cols : subsets(all_cols(a), k))
        if (sgn(oracle_minor(a, rows, cols)) != 0) return true;
    return false;
  };
  std::size_t best = 0;
  for (std::size_t k = 1; k <= std::min(a.rows(), a.cols()); ++k)
    if (has_nonzero_minor(k)) best = k;
  return best;
}

/// Every (r, c) with |r| = |c| <= min(m, n).
inline std::vector<ClassDesc> all_class_candidates(std::size_t m, std::size_t n) {
  std::vector<ClassDesc> out;
  for (std::size_t t = 0; t <= std::min(m, n); ++t)
    for (const auto& r : subsets(IndexSet::range(1, m), t))
      for (const auto& c : subsets(IndexSet::range(1, n), t)) out.push_back({r, c});
  return out;
}

/// Naive product, independent of matmul.
inline Mat oracle_product(const Mat& a, const Mat& b) {
  std::vector<Scalar> entries;
  for (std::size_t i = 1; i <= a.rows(); ++i)
    for (std::size_t j = 1; j <= b.cols(); ++j) {
      Scalar sum;
      for (std::size_t k = 1; k <= a.cols(); ++k) sum += a(i, k) * b(k, j);
      entries.push_back(sum);
    }
  return Mat(a.rows(), b.cols(), std::move(entries));
}

/// Random L in L_r (any signs): zeros above r_j, nonzero at r_j.
inline Mat random_in_class_L(std::size_t m, const IndexSet& r, std::uint64_t seed) {
  Mat l = random_matrix(m, r.size(), seed);
  for (std::size_t j = 1; j <= r.size(); ++j) {
    for (std::size_t i = 1; i < r[j - 1]; ++i) l(i, j) = 0;
    if (sgn(l(r[j - 1], j)) == 0) l(r[j - 1], j) = static_cast<long>(j % 2 == 0 ? -2 : 3);
  }
  return l;
}

/// Random U in U_c (any signs).
inline Mat random_in_class_U(std::size_t n, const IndexSet& c, std::uint64_t seed) {
  return random_in_class_L(n, c, seed).transpose();
}

}  // namespace tnlu::oracle
