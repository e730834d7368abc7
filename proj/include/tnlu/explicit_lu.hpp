#pragma once

#include <map>
#include <utility>

#include "tnlu/determinant.hpp"
#include "tnlu/echelon.hpp"
#include "tnlu/error.hpp"
#include "tnlu/matrix.hpp"
#include "tnlu/mclass.hpp"

namespace tnlu {

/// A = L U with L (m x t) in L*_r and U (t x n) in U_c.
struct LUPair {
  Mat L;
  Mat U;
  ClassDesc cls;

  friend bool operator==(const LUPair&, const LUPair&) = default;
};

struct DecomposeOptions {
  /// Verify in_class_M before decomposing. When off, a zero leading minor or
  /// pivot is still a hard error, but other class violations go unnoticed.
  bool checked = true;
  BruteForceGuard guard{};
};

namespace detail {

inline void require_class(const Mat& a, const ClassDesc& d, const DecomposeOptions& options) {
  require_well_formed(a, d);
  if (options.checked && !in_class_M(a, d, options.guard))
    fail(ErrorKind::not_in_class, "not in declared class " + d.to_string());
}

class MinorCache {
 public:
  explicit MinorCache(const Mat& a) : a_(a) {}
  const Scalar& operator()(const IndexSet& rows, const IndexSet& cols) {
    auto key = std::make_pair(rows, cols);
    auto it = cache_.find(key);
    if (it == cache_.end()) it = cache_.emplace(std::move(key), minor(a_, rows, cols)).first;
    return it->second;
  }

 private:
  const Mat& a_;
  std::map<std::pair<IndexSet, IndexSet>, Scalar> cache_;
};

}  // namespace detail

/// Closed-form factors, every entry a ratio of two minors of A:
///   l_ij = [r_1..r_{j-1}, i | c_1..c_j] / [r_1..r_j | c_1..c_j]          (i >= r_j)
///   u_ij = [r_1..r_i | c_1..c_{i-1}, j] / [r_1..r_{i-1} | c_1..c_{i-1}]  (j >= c_i)
/// and zero above / left of the leaders.
inline LUPair explicit_decompose(const Mat& a, const ClassDesc& d, const DecomposeOptions& options = {}) {
  detail::require_class(a, d, options);
  const std::size_t m = a.rows(), n = a.cols(), t = d.size();
  detail::MinorCache minor_of(a);

  std::vector<Scalar> leading(t + 1);
  for (std::size_t s = 0; s <= t; ++s) {
    leading[s] = minor_of(d.r.prefix(s), d.c.prefix(s));
    if (sgn(leading[s]) == 0)
      detail::fail(ErrorKind::not_in_class, "not in declared class " + d.to_string() + ": leading minor of order " +
                                                std::to_string(s) + " vanishes");
  }

  Mat l(m, t), u(t, n);
  for (std::size_t j = 1; j <= t; ++j) {
    const IndexSet rows_before = d.r.prefix(j - 1);
    const IndexSet cols = d.c.prefix(j);
    for (std::size_t i = d.r[j - 1]; i <= m; ++i) l(i, j) = minor_of(rows_before.with(i), cols) / leading[j];
  }
  for (std::size_t i = 1; i <= t; ++i) {
    const IndexSet rows = d.r.prefix(i);
    const IndexSet cols_before = d.c.prefix(i - 1);
    for (std::size_t j = d.c[i - 1]; j <= n; ++j) u(i, j) = minor_of(rows, cols_before.with(j)) / leading[i - 1];
  }
  return {std::move(l), std::move(u), d};
}

/// Forward substitution from A = L U: row s+1 of U from row r_{s+1} of A, then
/// column s+1 of L from column c_{s+1} of A, for s = 0..t-1.
inline LUPair reconstruct_lu(const Mat& a, const ClassDesc& d, const DecomposeOptions& options = {}) {
  detail::require_class(a, d, options);
  const std::size_t m = a.rows(), n = a.cols(), t = d.size();
  Mat l(m, t), u(t, n);
  for (std::size_t s = 1; s <= t; ++s) {
    const std::size_t lead_row = d.r[s - 1], lead_col = d.c[s - 1];
    for (std::size_t j = 1; j <= n; ++j) {
      Scalar value = a(lead_row, j);
      for (std::size_t k = 1; k < s; ++k) value -= l(lead_row, k) * u(k, j);
      u(s, j) = value;
    }
    const Scalar& pivot = u(s, lead_col);
    if (sgn(pivot) == 0)
      detail::fail(ErrorKind::not_in_class, "not in declared class " + d.to_string() + ": zero pivot in row " +
                                                std::to_string(s) + " of U");
    for (std::size_t i = 1; i <= m; ++i) {
      Scalar value = a(i, lead_col);
      for (std::size_t k = 1; k < s; ++k) value -= l(i, k) * u(k, lead_col);
      l(i, s) = value / pivot;
    }
  }
  return {std::move(l), std::move(u), d};
}

}  // namespace tnlu
