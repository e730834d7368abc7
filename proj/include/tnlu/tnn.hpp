#pragma once

#include <cstdint>
#include <optional>
#include <random>

#include "tnlu/determinant.hpp"
#include "tnlu/matrix.hpp"
#include "tnlu/mclass.hpp"

namespace tnlu {

struct MinorWitness {
  IndexSet rows;
  IndexSet cols;
  Scalar value;
  friend bool operator==(const MinorWitness&, const MinorWitness&) = default;
};

/// Outcome of a sign test over all minors. When the property fails, `witness`
/// is the first offending minor by (order, rows, cols) in lexicographic order,
/// so it does not depend on how the enumeration is scheduled.
struct TnnReport {
  bool holds = true;
  std::optional<MinorWitness> witness;
};

namespace detail {

template <class Accept>
TnnReport sign_test(const Mat& a, const BruteForceGuard& guard, const char* what, Accept accept) {
  guard.check(a, what);
  TnnReport report;
  for_each_minor(a, std::min(a.rows(), a.cols()), [&](const IndexSet& rows, const IndexSet& cols, const Scalar& v) {
    if (accept(sgn(v))) return true;
    report.holds = false;
    report.witness = MinorWitness{rows, cols, v};
    return false;
  });
  return report;
}

}  // namespace detail

/// Totally nonnegative: every minor >= 0.
inline TnnReport is_tnn(const Mat& a, const BruteForceGuard& guard = {}) {
  return detail::sign_test(a, guard, "is_tnn", [](int sign) { return sign >= 0; });
}

/// Totally positive: every minor > 0.
inline TnnReport is_tp(const Mat& a, const BruteForceGuard& guard = {}) {
  return detail::sign_test(a, guard, "is_tp", [](int sign) { return sign > 0; });
}

/// a(i,j) = 0 while a(i,l) != 0 and a(k,j) != 0 for some i < k, j < l.
struct CauchonViolation {
  std::size_t i, j, k, l;
  friend bool operator==(const CauchonViolation&, const CauchonViolation&) = default;
};

/// The zero-pattern condition every TNN matrix satisfies: if a(i,j) = 0 then
/// the row to its right or the column below it is zero. Returns the first
/// violation scanning zero entries (i,j) in row-major order, with the smallest
/// such l and k, or nullopt when the pattern is consistent.
inline std::optional<CauchonViolation> cauchon_check(const Mat& a) {
  for (std::size_t i = 1; i <= a.rows(); ++i)
    for (std::size_t j = 1; j <= a.cols(); ++j) {
      if (sgn(a(i, j)) != 0) continue;
      std::size_t l = j + 1, k = i + 1;
      while (l <= a.cols() && sgn(a(i, l)) == 0) ++l;
      while (k <= a.rows() && sgn(a(k, j)) == 0) ++k;
      if (l <= a.cols() && k <= a.rows()) return CauchonViolation{i, j, k, l};
    }
  return std::nullopt;
}

/// Seeded random TNN matrix: the m x n identity pattern multiplied, on a random
/// side each time, by `factors` elementary TNN matrices. Each factor is
/// I + x E(i+1,i), I + x E(i,i+1) with x >= 0 a small rational, or a
/// nonnegative diagonal that zeroes one position a third of the time. The
/// diagonal zeros bias the output toward singular matrices.
///
/// Only raw mt19937_64 output is used, so a (seed, shape, factors) triple gives
/// the same matrix on every platform.
inline Mat random_tnn(std::size_t m, std::size_t n, std::uint64_t seed, std::size_t factors) {
  std::mt19937_64 rng(seed);
  auto draw = [&](std::uint64_t bound) { return static_cast<std::size_t>(rng() % bound); };
  auto small_rational = [&] {
    const auto num = static_cast<long>(draw(4));
    const auto den = static_cast<long>(1 + draw(3));
    Scalar x(num, den);
    x.canonicalize();
    return x;
  };

  Mat a = Mat::identity(m, n);
  for (std::size_t f = 0; f < factors; ++f) {
    const bool left = draw(2) == 0;
    const std::size_t dim = left ? m : n;
    const std::size_t kind = draw(5);
    if (dim == 0 || (kind < 4 && dim < 2)) continue;
    if (kind < 4) {
      // kind 0,1: I + x E(i+1,i); kind 2,3: I + x E(i,i+1)
      const std::size_t i = 1 + draw(dim - 1);
      const Scalar x = small_rational();
      const bool lower = kind < 2;
      if (left) {
        const std::size_t target = lower ? i + 1 : i, source = lower ? i : i + 1;
        for (std::size_t j = 1; j <= n; ++j) a(target, j) += x * a(source, j);
      } else {
        const std::size_t target = lower ? i : i + 1, source = lower ? i + 1 : i;
        for (std::size_t r = 1; r <= m; ++r) a(r, target) += x * a(r, source);
      }
    } else {
      const std::size_t zero_at = draw(3) == 0 ? 1 + draw(dim) : 0;
      for (std::size_t p = 1; p <= dim; ++p) {
        const Scalar d = p == zero_at ? Scalar(0) : Scalar(static_cast<long>(1 + draw(3)));
        if (left)
          for (std::size_t j = 1; j <= n; ++j) a(p, j) *= d;
        else
          for (std::size_t r = 1; r <= m; ++r) a(r, p) *= d;
      }
    }
  }
  return a;
}

}  // namespace tnlu
