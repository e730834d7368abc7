#pragma once

#include <cstdint>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "tnlu/determinant.hpp"
#include "tnlu/error.hpp"
#include "tnlu/index_set.hpp"
#include "tnlu/matrix.hpp"

// Determinantal identities as exact evaluators. All sign bookkeeping goes
// through inversion_count.

namespace tnlu {

namespace detail {

inline Scalar parity_sign(InversionCount count) { return count.odd() ? Scalar(-1) : Scalar(1); }

}  // namespace detail

// --- Laplace relations ------------------------------------------------------

/// sum over I1 + I2 = I, |I1| = |J1|, of (-1)^l(I1,I2) [I1|J1] [I2|J2].
inline Scalar laplace_sum_rows(const Mat& a, const IndexSet& rows, const IndexSet& cols1, const IndexSet& cols2) {
  detail::require(cols1.size() + cols2.size() == rows.size(), "laplace_sum_rows needs |J1| + |J2| = |I|");
  Scalar total;
  for_each_subset(rows, cols1.size(), [&](const IndexSet& rows1) {
    const IndexSet rows2 = rows.minus(rows1);
    total += detail::parity_sign(inversion_count(rows1, rows2)) * minor(a, rows1, cols1) * minor(a, rows2, cols2);
    return true;
  });
  return total;
}

/// Right side of the row relation: (-1)^l(J1,J2) [I | J1 u J2] when J1, J2 are
/// disjoint, 0 otherwise.
inline Scalar laplace_value_rows(const Mat& a, const IndexSet& rows, const IndexSet& cols1, const IndexSet& cols2) {
  detail::require(cols1.size() + cols2.size() == rows.size(), "laplace_value_rows needs |J1| + |J2| = |I|");
  if (!cols1.disjoint_with(cols2)) return 0;
  return detail::parity_sign(inversion_count(cols1, cols2)) * minor(a, rows, cols1.unite(cols2));
}

/// sum over J1 + J2 = J, |J1| = |I1|, of (-1)^l(J1,J2) [I1|J1] [I2|J2].
inline Scalar laplace_sum_cols(const Mat& a, const IndexSet& cols, const IndexSet& rows1, const IndexSet& rows2) {
  detail::require(rows1.size() + rows2.size() == cols.size(), "laplace_sum_cols needs |I1| + |I2| = |J|");
  Scalar total;
  for_each_subset(cols, rows1.size(), [&](const IndexSet& cols1) {
    const IndexSet cols2 = cols.minus(cols1);
    total += detail::parity_sign(inversion_count(cols1, cols2)) * minor(a, rows1, cols1) * minor(a, rows2, cols2);
    return true;
  });
  return total;
}

inline Scalar laplace_value_cols(const Mat& a, const IndexSet& cols, const IndexSet& rows1, const IndexSet& rows2) {
  detail::require(rows1.size() + rows2.size() == cols.size(), "laplace_value_cols needs |I1| + |I2| = |J|");
  if (!rows1.disjoint_with(rows2)) return 0;
  return detail::parity_sign(inversion_count(rows1, rows2)) * minor(a, rows1.unite(rows2), cols);
}

inline bool laplace_check_rows(const Mat& a, const IndexSet& rows, const IndexSet& cols1, const IndexSet& cols2) {
  return laplace_sum_rows(a, rows, cols1, cols2) == laplace_value_rows(a, rows, cols1, cols2);
}

inline bool laplace_check_cols(const Mat& a, const IndexSet& cols, const IndexSet& rows1, const IndexSet& rows2) {
  return laplace_sum_cols(a, cols, rows1, rows2) == laplace_value_cols(a, cols, rows1, rows2);
}

// --- Vanishing minors -------------------------------------------------------

/// If [I1|J1] = 0 for every I1 in I with |I1| = |J1| (J1 fixed inside J), then
/// [I|J] = 0. Returns whether the implication holds on this instance.
inline bool vanishing_check(const Mat& a, const IndexSet& rows, const IndexSet& cols, const IndexSet& fixed_cols) {
  detail::require(rows.size() == cols.size(), "vanishing_check needs |I| = |J|");
  detail::require(fixed_cols.is_subset_of(cols), "vanishing_check needs J1 inside J");
  const bool hypothesis = for_each_subset(rows, fixed_cols.size(), [&](const IndexSet& rows1) {
    return sgn(minor(a, rows1, fixed_cols)) == 0;
  });
  return !hypothesis || sgn(minor(a, rows, cols)) == 0;
}

/// Row-fixed dual: [I1|J1] = 0 for every J1 in J with |J1| = |I1| forces [I|J] = 0.
inline bool vanishing_check_rows(const Mat& a, const IndexSet& rows, const IndexSet& cols, const IndexSet& fixed_rows) {
  detail::require(rows.size() == cols.size(), "vanishing_check_rows needs |I| = |J|");
  detail::require(fixed_rows.is_subset_of(rows), "vanishing_check_rows needs I1 inside I");
  const bool hypothesis = for_each_subset(cols, fixed_rows.size(), [&](const IndexSet& cols1) {
    return sgn(minor(a, fixed_rows, cols1)) == 0;
  });
  return !hypothesis || sgn(minor(a, rows, cols)) == 0;
}

// --- Cauchy-Binet -----------------------------------------------------------

/// sum over k-subsets K of the inner index range of [I|K]_A [K|J]_B.
inline Scalar cauchy_binet_sum(const Mat& a, const Mat& b, const IndexSet& rows, const IndexSet& cols) {
  detail::require(a.cols() == b.rows(), "cauchy_binet: inner dimensions differ (" + a.shape() + ", " + b.shape() + ")");
  detail::require(rows.size() == cols.size(), "cauchy_binet needs |I| = |J|");
  detail::require(rows.size() <= a.cols(), "cauchy_binet needs |I| <= inner dimension");
  detail::require(rows.within(a.rows()) && cols.within(b.cols()), "cauchy_binet: index set out of range");
  Scalar total;
  for_each_subset(IndexSet::range(1, a.cols()), rows.size(), [&](const IndexSet& inner) {
    total += minor(a, rows, inner) * minor(b, inner, cols);
    return true;
  });
  return total;
}

inline bool cauchy_binet_check(const Mat& a, const Mat& b, const IndexSet& rows, const IndexSet& cols) {
  const Scalar expansion = cauchy_binet_sum(a, b, rows, cols);
  return minor(matmul(a, b), rows, cols) == expansion;
}

// --- Sylvester --------------------------------------------------------------

/// The (n-m) x (n-m) matrix of bordered minors b_ij = [1..m, m+i | 1..m, m+j].
inline Mat sylvester_matrix(const Mat& a, std::size_t m) {
  detail::require(a.square(), "sylvester needs a square matrix, got " + a.shape());
  detail::require(m < a.rows(), "sylvester needs m < n");
  const std::size_t n = a.rows();
  const IndexSet core = IndexSet::range(1, m);
  Mat b(n - m, n - m);
  for (std::size_t i = 1; i <= n - m; ++i)
    for (std::size_t j = 1; j <= n - m; ++j) b(i, j) = minor(a, core.with(m + i), core.with(m + j));
  return b;
}

/// det(B) = [1..n|1..n] [1..m|1..m]^(n-m-1), in multiplicative form.
inline bool sylvester_check(const Mat& a, std::size_t m) {
  const Mat b = sylvester_matrix(a, m);
  const std::size_t n = a.rows();
  const Scalar core = minor(a, IndexSet::range(1, m), IndexSet::range(1, m));
  Scalar rhs = determinant(a);
  for (std::size_t e = 0; e + m + 1 < n; ++e) rhs *= core;
  return determinant(b) == rhs;
}

// --- Two-factor identities and Muir's law -----------------------------------

struct MinorRef {
  IndexSet rows;
  IndexSet cols;
  friend bool operator==(const MinorRef&, const MinorRef&) = default;
};

/// coefficient * [first] * [second]
struct MinorTerm {
  Scalar coefficient;
  MinorRef first;
  MinorRef second;
  friend bool operator==(const MinorTerm&, const MinorTerm&) = default;
};

/// sum of terms = 0 (claimed). Whether it actually vanishes on a matrix is what
/// `evaluate` measures.
struct TermIdentity {
  std::vector<MinorTerm> terms;
  friend bool operator==(const TermIdentity&, const TermIdentity&) = default;
};

inline Scalar evaluate(const TermIdentity& identity, const Mat& a) {
  Scalar total;
  for (const auto& term : identity.terms) {
    detail::require(term.first.rows.size() == term.first.cols.size() &&
                        term.second.rows.size() == term.second.cols.size(),
                    "minor term with unequal index set sizes");
    total += term.coefficient * minor(a, term.first.rows, term.first.cols) *
             minor(a, term.second.rows, term.second.cols);
  }
  return total;
}

/// Every term uses the same multiset of row indices and of column indices
/// across its two minors.
inline bool is_homogeneous(const TermIdentity& identity) {
  auto multiset = [](const IndexSet& x, const IndexSet& y) {
    std::map<std::size_t, int> counts;
    for (auto i : x) ++counts[i];
    for (auto i : y) ++counts[i];
    return counts;
  };
  for (const auto& term : identity.terms) {
    const auto& ref = identity.terms.front();
    if (multiset(term.first.rows, term.second.rows) != multiset(ref.first.rows, ref.second.rows) ||
        multiset(term.first.cols, term.second.cols) != multiset(ref.first.cols, ref.second.cols))
      return false;
  }
  return true;
}

/// Overlapping-column Laplace relation as a term identity:
/// sum over I1 + I2 = I of (-1)^l(I1,I2) [I1|J1][I2|J2] = 0, needs J1 and J2 to meet.
inline TermIdentity laplace_identity_rows(const IndexSet& rows, const IndexSet& cols1, const IndexSet& cols2) {
  detail::require(cols1.size() + cols2.size() == rows.size(), "laplace_identity_rows needs |J1| + |J2| = |I|");
  detail::require(!cols1.disjoint_with(cols2), "laplace_identity_rows needs J1 and J2 to overlap");
  TermIdentity identity;
  for_each_subset(rows, cols1.size(), [&](const IndexSet& rows1) {
    const IndexSet rows2 = rows.minus(rows1);
    identity.terms.push_back({detail::parity_sign(inversion_count(rows1, rows2)), {rows1, cols1}, {rows2, cols2}});
    return true;
  });
  return identity;
}

inline TermIdentity laplace_identity_cols(const IndexSet& cols, const IndexSet& rows1, const IndexSet& rows2) {
  detail::require(rows1.size() + rows2.size() == cols.size(), "laplace_identity_cols needs |I1| + |I2| = |J|");
  detail::require(!rows1.disjoint_with(rows2), "laplace_identity_cols needs I1 and I2 to overlap");
  TermIdentity identity;
  for_each_subset(cols, rows1.size(), [&](const IndexSet& cols1) {
    const IndexSet cols2 = cols.minus(cols1);
    identity.terms.push_back({detail::parity_sign(inversion_count(cols1, cols2)), {rows1, cols1}, {rows2, cols2}});
    return true;
  });
  return identity;
}

/// [i|j][s,s+1|j,k] - [s|j][i,s+1|j,k] + [s+1|j][i,s|j,k] = 0 for i < s, j < k.
inline TermIdentity three_term_relation(std::size_t i, std::size_t s, std::size_t j, std::size_t k) {
  detail::require(i < s && j < k, "three_term_relation needs i < s and j < k");
  return laplace_identity_rows(IndexSet{i, s, s + 1}, IndexSet{j}, IndexSet{j, k});
}

/// Adjoins rows P and columns Q to both minors of every term. P must avoid all
/// row sets, Q all column sets, |P| = |Q|, and the identity must be
/// homogeneous.
inline TermIdentity muir_extend(const TermIdentity& identity, const IndexSet& p, const IndexSet& q) {
  detail::require(p.size() == q.size(), "muir_extend needs |P| = |Q|");
  detail::require(is_homogeneous(identity), "muir_extend needs a homogeneous identity");
  TermIdentity out;
  for (const auto& term : identity.terms) {
    detail::require(p.disjoint_with(term.first.rows) && p.disjoint_with(term.second.rows),
                    "muir_extend: P " + p.to_string() + " meets a row set");
    detail::require(q.disjoint_with(term.first.cols) && q.disjoint_with(term.second.cols),
                    "muir_extend: Q " + q.to_string() + " meets a column set");
    out.terms.push_back({term.coefficient,
                         {term.first.rows.unite(p), term.first.cols.unite(q)},
                         {term.second.rows.unite(p), term.second.cols.unite(q)}});
  }
  return out;
}

// --- Seeded self-test -------------------------------------------------------

/// Random m x n matrix with entries p/q, |p| <= 4, 1 <= q <= 3. Deterministic
/// from the seed on every platform.
inline Mat random_matrix(std::size_t m, std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  Mat out(m, n);
  for (std::size_t i = 1; i <= m; ++i)
    for (std::size_t j = 1; j <= n; ++j) {
      const auto num = static_cast<long>(rng() % 9) - 4;
      const auto den = static_cast<long>(1 + rng() % 3);
      out(i, j) = Scalar(num, den);
      out(i, j).canonicalize();
    }
  return out;
}

struct SelftestFamily {
  std::string name;
  std::size_t passed = 0;
  std::size_t failed = 0;
};

struct SelftestReport {
  std::vector<SelftestFamily> families;
  bool all_passed() const {
    for (const auto& f : families)
      if (f.failed != 0) return false;
    return true;
  }
};

namespace detail {

class InstanceRng {
 public:
  explicit InstanceRng(std::uint64_t seed) : rng_(seed) {}
  std::size_t below(std::size_t bound) { return static_cast<std::size_t>(rng_() % bound); }
  std::size_t between(std::size_t lo, std::size_t hi) { return lo + below(hi - lo + 1); }
  std::uint64_t seed() { return rng_(); }
  IndexSet subset(std::size_t n, std::size_t k) {
    const auto all = subsets(IndexSet::range(1, n), k);
    return all[below(all.size())];
  }

 private:
  std::mt19937_64 rng_;
};

}  // namespace detail

/// Runs `count` seeded random instances of each identity family at sizes up to
/// `max_n` (>= 3). Instance k of a family uses seed `seed + k`.
inline SelftestReport identities_selftest(std::uint64_t seed, std::size_t count = 100, std::size_t max_n = 5) {
  detail::require(max_n >= 3, "identities_selftest needs max_n >= 3");
  SelftestReport report;
  auto family = [&](const std::string& name, auto&& instance) {
    SelftestFamily f{name};
    for (std::size_t k = 0; k < count; ++k) {
      detail::InstanceRng rng(seed + k);
      (instance(rng) ? f.passed : f.failed) += 1;
    }
    report.families.push_back(f);
  };

  family("laplace-rows", [&](detail::InstanceRng& rng) {
    const std::size_t m = rng.between(1, max_n), n = rng.between(1, max_n);
    const Mat a = random_matrix(m, n, rng.seed());
    const std::size_t p = rng.between(1, std::min(m, 2 * n));
    const std::size_t p1 = rng.between(p > n ? p - n : 0, std::min(p, n));
    const IndexSet rows = rng.subset(m, p), cols1 = rng.subset(n, p1), cols2 = rng.subset(n, p - p1);
    const bool overlap = !cols1.disjoint_with(cols2);
    return laplace_check_rows(a, rows, cols1, cols2) && (!overlap || laplace_sum_rows(a, rows, cols1, cols2) == 0);
  });
  family("laplace-cols", [&](detail::InstanceRng& rng) {
    const std::size_t m = rng.between(1, max_n), n = rng.between(1, max_n);
    const Mat a = random_matrix(m, n, rng.seed());
    const std::size_t p = rng.between(1, std::min(n, 2 * m));
    const std::size_t p1 = rng.between(p > m ? p - m : 0, std::min(p, m));
    const IndexSet cols = rng.subset(n, p), rows1 = rng.subset(m, p1), rows2 = rng.subset(m, p - p1);
    const bool overlap = !rows1.disjoint_with(rows2);
    return laplace_check_cols(a, cols, rows1, rows2) && (!overlap || laplace_sum_cols(a, cols, rows1, rows2) == 0);
  });
  // J1 and J2 forced to meet; the sum must be exactly 0.
  family("laplace-overlap", [&](detail::InstanceRng& rng) {
    const std::size_t n = rng.between(2, max_n);
    const Mat a = random_matrix(n, n, rng.seed());
    const std::size_t p = rng.between(2, n);
    const std::size_t p1 = rng.between(1, p - 1);
    const IndexSet rows = rng.subset(n, p), cols1 = rng.subset(n, p1);
    IndexSet cols2 = rng.subset(n, p - p1);
    if (cols1.disjoint_with(cols2)) cols2 = cols2.without(cols2.front()).with(cols1.front());
    return laplace_sum_rows(a, rows, cols1, cols2) == 0 && laplace_sum_cols(a, rows, cols1, cols2) == 0;
  });
  family("vanishing", [&](detail::InstanceRng& rng) {
    const std::size_t n = rng.between(2, max_n);
    Mat a = random_matrix(n, n, rng.seed());
    const std::size_t size = rng.between(1, n), fixed = rng.between(1, size);
    const IndexSet rows = rng.subset(n, size), cols = rng.subset(n, size);
    const IndexSet fixed_cols = subsets(cols, fixed)[rng.below(subsets(cols, fixed).size())];
    // Make A(I, J1) rank deficient so the hypothesis holds.
    const std::size_t last = fixed_cols.back();
    for (std::size_t i : rows) {
      Scalar combo;
      for (std::size_t j : fixed_cols.without(last)) combo += a(i, j);
      a(i, last) = combo;
    }
    return vanishing_check(a, rows, cols, fixed_cols) && vanishing_check_rows(a.transpose(), cols, rows, fixed_cols);
  });
  family("cauchy-binet", [&](detail::InstanceRng& rng) {
    const std::size_t m = rng.between(1, max_n), t = rng.between(1, max_n), n = rng.between(1, max_n);
    const Mat a = random_matrix(m, t, rng.seed()), b = random_matrix(t, n, rng.seed());
    const std::size_t k = rng.between(0, std::min({m, t, n}));
    return cauchy_binet_check(a, b, rng.subset(m, k), rng.subset(n, k));
  });
  family("sylvester", [&](detail::InstanceRng& rng) {
    const std::size_t n = rng.between(2, max_n);
    const Mat a = random_matrix(n, n, rng.seed());
    return sylvester_check(a, rng.between(1, n - 1));
  });
  family("muir", [&](detail::InstanceRng& rng) {
    const std::size_t n = rng.between(3, max_n);
    const Mat a = random_matrix(n, n, rng.seed());
    const std::size_t s = rng.between(2, n - 1);
    const std::size_t i = rng.between(1, s - 1);
    const IndexSet base_cols = rng.subset(n, 2);
    const IndexSet free_rows = IndexSet::range(1, n).minus(IndexSet{i, s, s + 1});
    const IndexSet free_cols = IndexSet::range(1, n).minus(base_cols);
    const std::size_t extra = rng.between(0, std::min(free_rows.size(), free_cols.size()));
    const IndexSet p = subsets(free_rows, extra)[rng.below(subsets(free_rows, extra).size())];
    const IndexSet q = subsets(free_cols, extra)[rng.below(subsets(free_cols, extra).size())];
    const TermIdentity base = three_term_relation(i, s, base_cols[0], base_cols[1]);
    return evaluate(base, a) == 0 && evaluate(muir_extend(base, p, q), a) == 0;
  });
  return report;
}

}  // namespace tnlu
