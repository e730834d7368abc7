#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "tnlu/determinant.hpp"
#include "tnlu/error.hpp"
#include "tnlu/index_set.hpp"
#include "tnlu/matrix.hpp"

namespace tnlu {

/// Names the class M_{r,c}: row leaders r and column leaders c, |r| = |c|.
struct ClassDesc {
  IndexSet r;
  IndexSet c;

  std::size_t size() const noexcept { return r.size(); }
  std::string to_string() const { return "(" + r.to_string() + ", " + c.to_string() + ")"; }
  friend bool operator==(const ClassDesc&, const ClassDesc&) = default;
};

/// Limits for the exponential minor enumerations (class condition (3), TNN
/// tests). Inputs with min(m, n) above `max_bruteforce` are refused unless
/// `override_guard` is set.
struct BruteForceGuard {
  std::size_t max_bruteforce = 8;
  bool override_guard = false;

  void check(const Mat& a, const char* what) const {
    if (!override_guard && std::min(a.rows(), a.cols()) > max_bruteforce)
      detail::fail(ErrorKind::size_guard, std::string(what) + ": " + a.shape() +
                                              " exceeds the brute-force limit of " + std::to_string(max_bruteforce) +
                                              " (raise it or pass the override)");
  }
};

inline void require_well_formed(const Mat& a, const ClassDesc& d) {
  detail::require(d.r.size() == d.c.size(), "class descriptor needs |r| = |c|, got " + d.to_string());
  detail::require(d.r.within(a.rows()) && d.c.within(a.cols()),
                  "class descriptor " + d.to_string() + " out of range for " + a.shape());
}

/// A in M_{r,c}:
///  (1) rank A = t,
///  (2) [r_1..r_s | c_1..c_s] != 0 for s <= t,
///  (3) [I|J] = 0 whenever |I| = |J| = s <= t and I is not >= r_1..r_s or J is
///      not >= c_1..c_s.
/// Condition (3) is checked over every index pair.
inline bool in_class_M(const Mat& a, const ClassDesc& d, const BruteForceGuard& guard = {}) {
  require_well_formed(a, d);
  guard.check(a, "in_class_M");
  const std::size_t t = d.size();
  if (rank(a) != t) return false;
  for (std::size_t s = 1; s <= t; ++s)
    if (sgn(minor(a, d.r.prefix(s), d.c.prefix(s))) == 0) return false;

  std::vector<IndexSet> row_leaders, col_leaders;
  for (std::size_t s = 0; s <= t; ++s) {
    row_leaders.push_back(d.r.prefix(s));
    col_leaders.push_back(d.c.prefix(s));
  }
  return for_each_minor(a, t, [&](const IndexSet& rows, const IndexSet& cols, const Scalar& value) {
    const std::size_t s = rows.size();
    const bool above = indexset_leq(row_leaders[s], rows) && indexset_leq(col_leaders[s], cols);
    return above || sgn(value) == 0;
  });
}

/// Greedy leader growth without verification: at step s = 1..rank(A) the
/// first pair (i, j) in lexicographic order with i > r_{s-1}, j > c_{s-1} and
/// a nonzero leading minor is taken. Returns nullopt if the growth stalls.
/// For a member of some class this is always that class.
inline std::optional<ClassDesc> propose_class(const Mat& a) {
  const std::size_t t = rank(a);
  ClassDesc d;
  for (std::size_t s = 1; s <= t; ++s) {
    const std::size_t first_row = d.r.empty() ? 1 : d.r.back() + 1;
    const std::size_t first_col = d.c.empty() ? 1 : d.c.back() + 1;
    bool grown = false;
    for (std::size_t i = first_row; i <= a.rows() && !grown; ++i)
      for (std::size_t j = first_col; j <= a.cols() && !grown; ++j)
        if (sgn(minor(a, d.r.with(i), d.c.with(j))) != 0) {
          d.r = d.r.with(i);
          d.c = d.c.with(j);
          grown = true;
        }
    if (!grown) return std::nullopt;
  }
  return d;
}

/// The unique class containing A, or nullopt when A lies in none. The greedy
/// proposal is always confirmed with in_class_M.
inline std::optional<ClassDesc> detect_class(const Mat& a, const BruteForceGuard& guard = {}) {
  guard.check(a, "detect_class");
  auto d = propose_class(a);
  if (!d || !in_class_M(a, *d, guard)) return std::nullopt;
  return d;
}

}  // namespace tnlu
