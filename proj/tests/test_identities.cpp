#include <gtest/gtest.h>

#include "support/corpus.hpp"
#include "support/oracles.hpp"
#include "tnlu/tnlu.hpp"

using namespace tnlu;
using tnlu::oracle::oracle_minor;

namespace {

const Mat kCryer{{0, 0, 0}, {1, 0, 1}, {1, 0, 1}};
const Mat kStaircase{{0, 1, 2, 1}, {0, 2, 4, 2}, {0, 1, 2, 3}, {0, 3, 6, 11}};

}  // namespace

TEST(Laplace, Examples) {
  const Mat a{{2, 3}, {5, 7}};
  EXPECT_EQ(laplace_sum_rows(a, {1, 2}, {1}, {2}), -1);
  EXPECT_EQ(laplace_sum_rows(a, {1, 2}, {1}, {1}), 0);
  EXPECT_EQ(laplace_sum_cols(a, {1, 2}, {2}, {2}), 0);
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const Mat b = random_matrix(3, 3, seed);
    // l({2};{1,3}) = 1
    EXPECT_EQ(laplace_sum_rows(b, {1, 2, 3}, {2}, {1, 3}), -oracle_minor(b, {1, 2, 3}, {1, 2, 3}));
    EXPECT_TRUE(laplace_check_cols(b, {1, 2, 3}, {3}, {1, 2}));
  }
  EXPECT_THROW(laplace_sum_rows(a, {1, 2}, {1}, {}), Error);
}

TEST(Laplace, ExhaustiveOnFourByFour) {
  const Mat a = random_matrix(4, 4, 2024);
  const IndexSet all = IndexSet::range(1, 4);
  for (std::size_t p = 1; p <= 4; ++p)
    for (const auto& rows : subsets(all, p))
      for (std::size_t p1 = 0; p1 <= p; ++p1)
        for (const auto& j1 : subsets(all, p1))
          for (const auto& j2 : subsets(all, p - p1)) {
            const Scalar sum = laplace_sum_rows(a, rows, j1, j2);
            if (!j1.disjoint_with(j2)) {
              EXPECT_EQ(sum, 0);
            } else {
              const Scalar sign = inversion_count(j1, j2).odd() ? -1 : 1;
              EXPECT_EQ(sum, sign * oracle_minor(a, rows, j1.unite(j2)));
            }
          }
}

TEST(Vanishing, Examples) {
  EXPECT_TRUE(vanishing_check(kCryer, {2, 3}, {1, 3}, {3}));
  EXPECT_TRUE(vanishing_check(kCryer, {2, 3}, {1, 2}, {2}));  // zero column
  EXPECT_EQ(minor(kCryer, {2, 3}, {1, 2}), 0);
  EXPECT_THROW(vanishing_check(kCryer, {2, 3}, {1, 3}, {2}), Error);
  EXPECT_THROW(vanishing_check(kCryer, {2, 3}, {1}, {1}), Error);
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    Mat a = random_matrix(4, 4, seed + 500);
    // columns 1 and 2 proportional: every 2x2 minor on J1 = {1,2} vanishes
    for (std::size_t i = 1; i <= 4; ++i) a(i, 2) = 3 * a(i, 1);
    for (const auto& cols : subsets(IndexSet::range(1, 4), 3)) {
      for (const auto& j1 : subsets(cols, 2)) EXPECT_TRUE(vanishing_check(a, {1, 2, 4}, cols, j1));
      if (IndexSet({1, 2}).is_subset_of(cols)) {
        EXPECT_EQ(oracle_minor(a, {1, 2, 4}, cols), 0);
      }
    }
    EXPECT_TRUE(vanishing_check_rows(a.transpose(), {1, 2, 3}, {1, 2, 4}, {1, 2}));
  }
}

TEST(CauchyBinet, Examples) {
  const Mat l{{0}, {1}, {1}}, u{{1, 0, 1}};
  EXPECT_EQ(cauchy_binet_sum(l, u, {2}, {1}), 1);
  EXPECT_TRUE(cauchy_binet_check(l, u, {2}, {1}));

  const Mat l4{{1, 0}, {2, 0}, {1, 1}, {3, 4}}, u4{{0, 1, 2, 1}, {0, 0, 0, 2}};
  EXPECT_EQ(cauchy_binet_sum(l4, u4, {1, 3}, {2, 4}), 2);
  EXPECT_EQ(oracle_minor(kStaircase, {1, 3}, {2, 4}), 2);

  const Mat b = random_matrix(3, 4, 8);
  for (const auto& rows : subsets(IndexSet::range(1, 3), 2))
    for (const auto& cols : subsets(IndexSet::range(1, 4), 2))
      EXPECT_EQ(cauchy_binet_sum(Mat::identity(3), b, rows, cols), oracle_minor(b, rows, cols));
  EXPECT_EQ(cauchy_binet_sum(l4, u4, {}, {}), 1);
  EXPECT_THROW(cauchy_binet_sum(l4, u4, {1, 2, 3}, {1, 2, 3}), Error);
  EXPECT_THROW(cauchy_binet_sum(l4, l4, {1}, {1}), Error);
}

TEST(CauchyBinet, LeadingMinorsOnCorpus) {
  for (const auto& c : oracle::tnn_corpus(48, 4242)) {
    const auto d = detect_class(c.a);
    ASSERT_TRUE(d);
    const LUPair lu = explicit_decompose(c.a, *d);
    for (std::size_t s = 0; s <= d->size(); ++s) {
      const IndexSet k = IndexSet::range(1, s);
      EXPECT_EQ(oracle_minor(c.a, d->r.prefix(s), d->c.prefix(s)),
                oracle_minor(lu.L, d->r.prefix(s), k) * oracle_minor(lu.U, k, d->c.prefix(s)));
      EXPECT_TRUE(cauchy_binet_check(lu.L, lu.U, d->r.prefix(s), d->c.prefix(s)));
    }
  }
}

TEST(Sylvester, Examples) {
  const Mat a{{2, 3}, {5, 7}};
  EXPECT_EQ(sylvester_matrix(a, 1), (Mat{{-1}}));
  EXPECT_TRUE(sylvester_check(a, 1));
  EXPECT_TRUE(sylvester_check(kStaircase, 2));
  EXPECT_TRUE(sylvester_check(kStaircase, 1));
  for (std::uint64_t seed = 0; seed < 30; ++seed) EXPECT_TRUE(sylvester_check(random_matrix(3, 3, seed), 1));
  EXPECT_THROW(sylvester_check(a, 2), Error);
  EXPECT_THROW(sylvester_check(Mat(2, 3), 1), Error);
}

TEST(Muir, EmptyExtensionIsIdentity) {
  const TermIdentity base = three_term_relation(1, 2, 1, 3);
  EXPECT_EQ(muir_extend(base, {}, {}), base);
  ASSERT_EQ(base.terms.size(), 3u);
}

TEST(Muir, ThreeTermRelationShape) {
  // [i|j][s,s+1|j,k] - [s|j][i,s+1|j,k] + [s+1|j][i,s|j,k]
  const TermIdentity base = three_term_relation(1, 3, 2, 5);
  auto has = [&](long coefficient, MinorRef first, MinorRef second) {
    for (const auto& term : base.terms)
      if (term.coefficient == coefficient && term.first == first && term.second == second) return true;
    return false;
  };
  EXPECT_TRUE(has(1, {{1}, {2}}, {{3, 4}, {2, 5}}));
  EXPECT_TRUE(has(-1, {{3}, {2}}, {{1, 4}, {2, 5}}));
  EXPECT_TRUE(has(1, {{4}, {2}}, {{1, 3}, {2, 5}}));
}

TEST(Muir, ExtendedRelationVanishes) {
  const TermIdentity base = three_term_relation(1, 3, 2, 4);
  const TermIdentity extended = muir_extend(base, {2, 5}, {1, 3});
  for (const auto& term : extended.terms) {
    EXPECT_TRUE(IndexSet({2, 5}).is_subset_of(term.first.rows));
    EXPECT_TRUE(IndexSet({1, 3}).is_subset_of(term.second.cols));
  }
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const Mat a = random_matrix(5, 5, seed + 9000);
    EXPECT_EQ(evaluate(extended, a), 0);
    Scalar by_oracle;
    for (const auto& term : extended.terms)
      by_oracle += term.coefficient * oracle_minor(a, term.first.rows, term.first.cols) *
                   oracle_minor(a, term.second.rows, term.second.cols);
    EXPECT_EQ(by_oracle, 0);
  }
}

TEST(Muir, Errors) {
  const TermIdentity base = three_term_relation(1, 3, 2, 4);
  EXPECT_THROW(muir_extend(base, {3}, {1}), Error);
  EXPECT_THROW(muir_extend(base, {2}, {4}), Error);
  EXPECT_THROW(muir_extend(base, {2, 5}, {1}), Error);
  TermIdentity lopsided{{MinorTerm{1, {{1}, {1}}, {{2}, {2}}}, MinorTerm{1, {{1}, {2}}, {{1, 2}, {1, 2}}}}};
  EXPECT_FALSE(is_homogeneous(lopsided));
  EXPECT_THROW(muir_extend(lopsided, {}, {}), Error);
}

TEST(Selftest, AllFamiliesPass) {
  const SelftestReport report = identities_selftest(17, 100);
  EXPECT_TRUE(report.all_passed());
  ASSERT_EQ(report.families.size(), 7u);
  for (const auto& f : report.families) EXPECT_EQ(f.passed, 100u) << f.name;
}
