#include <gtest/gtest.h>

#include <random>

#include "eve/cli/fixtures.hpp"
#include "eve/convert.hpp"
#include "eve/errors.hpp"
#include "eve/measures.hpp"
#include "eve/spectral.hpp"
#include "support.hpp"

namespace eve {
namespace {

void expect_counts(const BinaryCounts& c, double a, double b, double cc, double d) {
  EXPECT_DOUBLE_EQ(c.a, a);
  EXPECT_DOUBLE_EQ(c.b, b);
  EXPECT_DOUBLE_EQ(c.c, cc);
  EXPECT_DOUBLE_EQ(c.d, d);
  EXPECT_NEAR(c.a + c.b + c.c + c.d, c.m_pairs, 1e-9);
}

TEST(Pairs, M4Counts) {
  const ConfusionMatrix m4 = cli::fixture("M4");
  expect_counts(pairs_binary(m4), 2849, 890, 826, 6610);
  expect_counts(pairs_binary_oracle(m4), 2849, 890, 826, 6610);
  EXPECT_DOUBLE_EQ(pairs_binary(m4).m_pairs, 150.0 * 149.0 / 2.0);
}

TEST(Pairs, SmallCases) {
  expect_counts(pairs_binary(ConfusionMatrix::from_dense({{2, 0}, {0, 2}})), 2, 0, 0, 4);
  expect_counts(pairs_binary_oracle(ConfusionMatrix::from_dense({{1, 0}, {0, 1}})), 0, 0, 0, 1);
  expect_counts(pairs_binary(ConfusionMatrix::from_dense({{1, 0}, {0, 1}})), 0, 0, 0, 1);
}

TEST(Pairs, DownstreamMeasuresForM4) {
  const auto r = evaluate(pairs_binary(cli::fixture("M4")).to_confusion(), false, MeasureSelection::all());
  EXPECT_NEAR(*r.values.at("sen"), 0.775, 0.001);
  EXPECT_NEAR(*r.values.at("spe"), 0.881, 0.001);
  EXPECT_NEAR(*r.values.at("pre"), 0.762, 0.001);
  EXPECT_NEAR(*r.values.at("acc"), 0.846, 0.001);
  EXPECT_NEAR(*r.values.at("auc"), 0.828, 0.001);
  EXPECT_NEAR(*r.values.at("eve"), 0.966, 0.001);
}

TEST(Pairs, UncorrectedIdentitiesDisagreeWithEnumeration) {
  const ConfusionMatrix m4 = cli::fixture("M4");
  const BinaryCounts wrong = pairs_binary_uncorrected(m4);
  const BinaryCounts right = pairs_binary_oracle(m4);
  EXPECT_NE(wrong.b, right.b);
  EXPECT_NE(wrong.c, right.c);
  const auto r = binary_measures(wrong.to_confusion());
  EXPECT_NEAR(*r.sen, 0.760, 0.001);
}

TEST(Pairs, Errors) {
  EXPECT_THROW(pairs_binary(cli::fixture("M9")), ValidationError);
  EXPECT_NO_THROW(pairs_binary(cli::fixture("M9"), PairPolicy::allow_fractional));
  EXPECT_THROW(pairs_binary(ConfusionMatrix::from_dense({{1, 0}, {0, 0}})), ValidationError);
  EXPECT_NO_THROW(pairs_binary_oracle(cli::fixture("M8")));
  EXPECT_THROW(pairs_binary_oracle(ConfusionMatrix::from_dense({{10000, 1}, {0, 1}})), ValidationError);
  try {
    pairs_binary(cli::fixture("M9"));
  } catch (const ValidationError& e) {
    EXPECT_NE(std::string(e.what()).find("one-vs-rest"), std::string::npos) << e.what();
  }
}

TEST(Pairs, FormulaMatchesOracleOnFixtures) {
  for (std::string_view id : testing::kIntegerFixtureIds) {
    const ConfusionMatrix m = cli::fixture(id);
    if (m.total() > kPairOracleLimit) continue;
    const auto f = pairs_binary(m);
    const auto o = pairs_binary_oracle(m);
    EXPECT_EQ(f.a, o.a) << id;
    EXPECT_EQ(f.b, o.b) << id;
    EXPECT_EQ(f.c, o.c) << id;
    EXPECT_EQ(f.d, o.d) << id;
  }
}

TEST(Pairs, FormulaMatchesOracleOnRandomMatrices) {
  std::mt19937 rng(47);
  std::uniform_int_distribution<std::size_t> size(2, 5);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = size(rng);
    const int max_cell = std::max(1, static_cast<int>(200 / (n * n)));
    const ConfusionMatrix m = testing::random_counts(rng, n, max_cell - 1, false);
    const auto f = pairs_binary(m);
    const auto o = pairs_binary_oracle(m);
    ASSERT_EQ(f.a, o.a);
    ASSERT_EQ(f.b, o.b);
    ASSERT_EQ(f.c, o.c);
    ASSERT_EQ(f.d, o.d);
    ASSERT_GE(f.b, 0.0);
    ASSERT_GE(f.c, 0.0);
  }
}

TEST(Pairs, DiagonalMatrixHasNoDisagreeingPairs) {
  const auto c = pairs_binary(ConfusionMatrix::from_dense({{3, 0, 0}, {0, 5, 0}, {0, 0, 2}}));
  EXPECT_EQ(c.b, 0.0);
  EXPECT_EQ(c.c, 0.0);
}

TEST(OneVsRest, M4Classes) {
  const ConfusionMatrix m4 = cli::fixture("M4");
  const ConfusionMatrix first = one_vs_rest(m4, 0);
  EXPECT_EQ(first, ConfusionMatrix::from_dense({{50, 0}, {0, 100}}));
  const auto r1 = evaluate(first, false, MeasureSelection::all());
  for (std::string_view k : {"sen", "spe", "pre", "f1s", "fmi", "auc", "acc", "kappa", "mcc_s", "nmi", "cen_s", "eve"}) {
    EXPECT_NEAR(*r1.values.at(k), 1.0, 1e-12) << k;
  }
  const auto r2 = evaluate(one_vs_rest(m4, 1), false, MeasureSelection::all());
  EXPECT_NEAR(*r2.values.at("pre"), 0.833, 0.001);
  EXPECT_NEAR(*r2.values.at("auc"), 0.815, 0.001);
  EXPECT_NEAR(*r2.values.at("eve"), 0.948, 0.001);
}

TEST(OneVsRest, M6LastClassIsPerfect) {
  const auto r = evaluate(one_vs_rest(cli::fixture("M6"), 4), false, MeasureSelection::all());
  for (std::string_view k : {"sen", "spe", "pre", "acc", "kappa", "mcc_s", "nmi", "cen_s", "eve"}) {
    EXPECT_NEAR(*r.values.at(k), 1.0, 1e-12) << k;
  }
}

TEST(OneVsRest, TotalsAndTruePositives) {
  for (std::string_view id : testing::kFixtureIds) {
    const ConfusionMatrix m = cli::fixture(id);
    double tp = 0.0;
    for (std::size_t j = 0; j < m.n(); ++j) {
      const ConfusionMatrix o = one_vs_rest(m, j);
      EXPECT_NEAR(o.total(), m.total(), 1e-9 * m.total()) << id;
      tp += o(0, 0);
    }
    EXPECT_NEAR(tp, m.matrix().trace(), 1e-9) << id;
  }
  EXPECT_THROW(one_vs_rest(cli::fixture("M4"), 3), ValidationError);
}

}  // namespace
}  // namespace eve
