#include <gtest/gtest.h>

#include "support/corpus.hpp"
#include "support/oracles.hpp"
#include "tnlu/tnlu.hpp"

using namespace tnlu;

TEST(Tnn, Examples) {
  EXPECT_TRUE(is_tnn(Mat{{0, 0, 0}, {1, 0, 1}, {1, 0, 1}}).holds);
  const auto report = is_tnn(Mat{{0, 1}, {1, 1}});
  EXPECT_FALSE(report.holds);
  ASSERT_TRUE(report.witness.has_value());
  EXPECT_EQ(*report.witness, (MinorWitness{{1, 2}, {1, 2}, -1}));
  EXPECT_TRUE(is_tnn(Mat::identity(4)).holds);
  const auto tp = is_tp(Mat::identity(4));
  EXPECT_FALSE(tp.holds);
  EXPECT_EQ(tp.witness->rows, (IndexSet{1}));
  EXPECT_EQ(tp.witness->cols, (IndexSet{2}));
  EXPECT_TRUE(is_tp(Mat{{1, 1}, {1, 2}}).holds);
}

TEST(Tnn, WitnessIsFirstNegativeMinorInScanOrder) {
  // 1x1 minors come first, then I and J in lexicographic order
  const auto report = is_tnn(Mat{{1, 2, 1}, {1, 1, 3}, {0, 2, -1}});
  ASSERT_TRUE(report.witness.has_value());
  EXPECT_EQ(report.witness->rows, (IndexSet{3}));
  EXPECT_EQ(report.witness->cols, (IndexSet{3}));
  const auto second = is_tnn(Mat{{1, 2, 1}, {1, 1, 3}, {0, 2, 1}});
  EXPECT_EQ(second.witness->rows, (IndexSet{1, 2}));
  EXPECT_EQ(second.witness->cols, (IndexSet{1, 2}));
}

TEST(Tnn, WitnessIsSoundOnRandomMatrices) {
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const Mat a = random_matrix(1 + seed % 4, 1 + (seed / 4) % 4, seed + 31);
    const auto report = is_tnn(a);
    bool expected = true;
    for (std::size_t k = 1; k <= std::min(a.rows(), a.cols()); ++k)
      for (const auto& r : subsets(all_rows(a), k))
        for (const auto& c : subsets(all_cols(a), k)) expected = expected && sgn(oracle::oracle_minor(a, r, c)) >= 0;
    EXPECT_EQ(report.holds, expected);
    if (!report.holds) {
      EXPECT_LT(sgn(oracle::oracle_minor(a, report.witness->rows, report.witness->cols)), 0);
    }
  }
}

TEST(Tnn, SizeGuard) {
  try {
    is_tnn(Mat::identity(9));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::size_guard);
    EXPECT_NE(std::string(e.what()).find("override"), std::string::npos);
  }
}

TEST(Cauchon, Examples) {
  EXPECT_EQ(cauchon_check(Mat{{0, 0, 0}, {1, 0, 1}, {1, 0, 1}}), std::nullopt);
  EXPECT_EQ(cauchon_check(Mat{{0, 1}, {1, 0}}), (CauchonViolation{1, 1, 2, 2}));
  EXPECT_EQ(cauchon_check(Mat{{1, 0, 0, 2}, {0, 0, 0, 0}, {3, 0, 0, 0}}), std::nullopt);
  EXPECT_EQ(cauchon_check(Mat{{1, 1, 0, 2}, {0, 1, 0, 0}, {3, 0, 5, 0}}), (CauchonViolation{1, 3, 3, 4}));
}

TEST(RandomTnn, DeterministicAndTnn) {
  EXPECT_EQ(random_tnn(3, 3, 42, 0), Mat::identity(3));
  EXPECT_EQ(random_tnn(2, 4, 42, 0), Mat::identity(2, 4));
  EXPECT_EQ(random_tnn(4, 5, 123, 18), random_tnn(4, 5, 123, 18));
  EXPECT_NE(random_tnn(4, 5, 123, 18), random_tnn(4, 5, 124, 18));
  for (const auto& c : oracle::tnn_corpus(120, 555)) {
    EXPECT_TRUE(is_tnn(c.a).holds) << "seed " << c.seed;
    EXPECT_EQ(cauchon_check(c.a), std::nullopt) << "seed " << c.seed;
    for (const auto& x : c.a.entries()) EXPECT_GE(sgn(x), 0);
  }
}

TEST(RandomTnn, CorpusIsMixed) {
  std::size_t zero = 0, singular = 0, full = 0;
  for (const auto& c : oracle::tnn_corpus()) {
    const std::size_t r = rank(c.a);
    if (r == 0) ++zero;
    if (r == std::min(c.a.rows(), c.a.cols()))
      ++full;
    else
      ++singular;
  }
  EXPECT_GT(singular, 60u);
  EXPECT_GT(full, 60u);
  EXPECT_LT(zero, 40u);
}

TEST(Tnn, ClosedUnderProducts) {
  for (std::uint64_t seed = 0; seed < 80; ++seed) {
    const std::size_t m = 1 + seed % 5, k = 1 + (seed / 5) % 5, n = 1 + (seed / 25) % 5;
    const Mat a = random_tnn(m, k, 2 * seed, 3 * (m + k));
    const Mat b = random_tnn(k, n, 2 * seed + 1, 3 * (k + n));
    EXPECT_TRUE(is_tnn(matmul(a, b)).holds) << "seed " << seed;
  }
}

TEST(Tnn, ClosedUnderDeletion) {
  for (const auto& c : oracle::tnn_corpus(60, 321)) {
    for (std::size_t i = 1; i <= c.a.rows(); ++i) EXPECT_TRUE(is_tnn(delete_row(c.a, i)).holds);
    for (std::size_t j = 1; j <= c.a.cols(); ++j) EXPECT_TRUE(is_tnn(delete_col(c.a, j)).holds);
  }
}
