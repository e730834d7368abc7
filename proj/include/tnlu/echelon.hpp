#pragma once

#include <string>
#include <vector>

#include "tnlu/error.hpp"
#include "tnlu/index_set.hpp"
#include "tnlu/matrix.hpp"

namespace tnlu {

/// Result of an echelon-form test. `pivots` lists the leading-entry positions
/// (columns for the upper form, rows for the lower form) and is only filled
/// when `is_echelon` holds.
struct EchelonReport {
  bool is_echelon = false;
  bool is_strict = false;
  IndexSet pivots;
};

/// Upper (row) echelon form: the leading entries of the nonzero rows move
/// strictly to the right and zero rows sit at the bottom. Strict adds "no zero
/// rows". The 0 x n matrix is strictly echelon with no pivots.
inline EchelonReport is_upper_echelon(const Mat& u) {
  EchelonReport report;
  std::vector<std::size_t> pivots;
  bool seen_zero_row = false;
  for (std::size_t i = 1; i <= u.rows(); ++i) {
    std::size_t lead = 0;
    for (std::size_t j = 1; j <= u.cols() && lead == 0; ++j)
      if (sgn(u(i, j)) != 0) lead = j;
    if (lead == 0) {
      seen_zero_row = true;
      continue;
    }
    if (seen_zero_row || (!pivots.empty() && lead <= pivots.back())) return report;
    pivots.push_back(lead);
  }
  report.is_echelon = true;
  report.is_strict = !seen_zero_row;
  report.pivots = IndexSet(std::move(pivots));
  return report;
}

/// Lower (column) echelon form: the transpose is in upper echelon form.
inline EchelonReport is_lower_echelon(const Mat& l) { return is_upper_echelon(l.transpose()); }

/// L in class L_r: column j has its uppermost nonzero entry at row r_j.
/// `starred` additionally requires that entry to be exactly 1.
inline bool in_class_L(const Mat& l, const IndexSet& r, bool starred) {
  detail::require(l.cols() == r.size(), "in_class_L: " + l.shape() + " matrix needs |r| = columns, r = " + r.to_string());
  detail::require(r.within(l.rows()), "in_class_L: r = " + r.to_string() + " out of range for " + l.shape());
  for (std::size_t j = 1; j <= r.size(); ++j) {
    const std::size_t lead = r[j - 1];
    if (sgn(l(lead, j)) == 0) return false;
    if (starred && l(lead, j) != 1) return false;
    for (std::size_t i = 1; i < lead; ++i)
      if (sgn(l(i, j)) != 0) return false;
  }
  return true;
}

/// U in class U_c: row i has its leftmost nonzero entry at column c_i.
inline bool in_class_U(const Mat& u, const IndexSet& c) {
  detail::require(u.rows() == c.size(), "in_class_U: " + u.shape() + " matrix needs |c| = rows, c = " + c.to_string());
  detail::require(c.within(u.cols()), "in_class_U: c = " + c.to_string() + " out of range for " + u.shape());
  for (std::size_t i = 1; i <= c.size(); ++i) {
    const std::size_t lead = c[i - 1];
    if (sgn(u(i, lead)) == 0) return false;
    for (std::size_t j = 1; j < lead; ++j)
      if (sgn(u(i, j)) != 0) return false;
  }
  return true;
}

}  // namespace tnlu
