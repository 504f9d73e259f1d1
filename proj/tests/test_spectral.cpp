#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "eve/cli/fixtures.hpp"
#include "eve/densemat.hpp"
#include "eve/errors.hpp"
#include "eve/measures.hpp"
#include "eve/spectral.hpp"
#include "support.hpp"

namespace eve {
namespace {

// Fixtures whose A exists (no zero diagonal cell).
std::vector<ConfusionMatrix> spectral_fixtures() {
  std::vector<ConfusionMatrix> out;
  for (std::string_view id : testing::kFixtureIds) {
    if (id == "M7") {
      out.push_back(smooth(cli::fixture(id)));
    } else {
      out.push_back(cli::fixture(id));
    }
  }
  return out;
}

TEST(Derive, BalancedBinaryGivesSymmetricP) {
  const auto d = derive(cli::fixture("Mb"));
  EXPECT_EQ(d.p, Matrix::from_rows({{0.9, 0.1}, {0.1, 0.9}}));
  EXPECT_EQ(d.b, d.p);
}

TEST(Derive, IdentityIsFixed) {
  const auto d = derive(ConfusionMatrix::from_matrix(Matrix::identity(4) * 7.0));
  EXPECT_EQ(d.p, Matrix::identity(4));
  EXPECT_EQ(d.b, Matrix::identity(4));
  EXPECT_EQ(d.a, Matrix::identity(4));
}

TEST(Derive, M1OffDiagonalOfB) {
  const auto d = derive(cli::fixture("M1"));
  EXPECT_NEAR(d.b(0, 1), (30.0 / 160.0 + 15.0 / 140.0) / 2.0, 1e-15);
  EXPECT_NEAR(d.b(0, 1), 0.14732, 1e-5);
}

TEST(Derive, InvariantsOnFixtures) {
  for (const auto& m : spectral_fixtures()) {
    const auto d = derive(m);
    for (double s : d.p.col_sums()) EXPECT_NEAR(s, 1.0, 1e-12);
    EXPECT_EQ(d.b, (d.p + d.p.transposed()) * 0.5);
    EXPECT_TRUE(d.b.is_symmetric(0.0));
    for (std::size_t i = 0; i < m.n(); ++i) EXPECT_NEAR(d.a(i, i), 1.0, 1e-12);
  }
}

TEST(Derive, Errors) {
  EXPECT_THROW(derive(ConfusionMatrix::from_dense({{1, 0}, {1, 0}})), ValidationError);
  try {
    derive(cli::fixture("M7"));
    FAIL() << "expected ValidationError";
  } catch (const ValidationError& e) {
    EXPECT_NE(std::string(e.what()).find("smooth"), std::string::npos) << e.what();
  }
}

TEST(DiagonalDominance, Examples) {
  EXPECT_TRUE(is_diagonally_dominant(column_stochastic(cli::fixture("Mb"))));
  EXPECT_FALSE(is_diagonally_dominant(column_stochastic(cli::fixture("Ma"))));
  EXPECT_TRUE(is_diagonally_dominant(column_stochastic(cli::fixture("M5"))));
}

TEST(Gershgorin, Examples) {
  const auto mb = gershgorin_bounds(derive(cli::fixture("Mb")).a);
  EXPECT_NEAR(mb.thr_min, 0.888, 0.001);
  EXPECT_NEAR(mb.thr_max, 1.111, 0.001);
  const auto m5 = gershgorin_bounds(derive(cli::fixture("M5")).a);
  EXPECT_NEAR(m5.thr_min, 0.279, 0.001);
  EXPECT_NEAR(m5.thr_max, 1.721, 0.001);
  const auto id = gershgorin_bounds(Matrix::identity(3));
  EXPECT_EQ(id.thr_min, 1.0);
  EXPECT_EQ(id.thr_max, 1.0);
}

TEST(Spectrum, Examples) {
  const Spectrum m3 = spectrum(cli::fixture("M3"));
  EXPECT_NEAR(m3.lambdas[0], 1.000, 0.001);
  EXPECT_NEAR(m3.lambdas[1], 0.948, 0.001);
  EXPECT_NEAR(m3.thr_min, 0.973, 0.001);
  EXPECT_NEAR(m3.thr_max, 1.026, 0.001);

  const Spectrum m6 = spectrum(cli::fixture("M6"));
  const double expected[] = {1.149, 1.033, 1.000, 0.185, 0.171};
  for (std::size_t i = 0; i < 5; ++i) EXPECT_NEAR(m6.lambdas[i], expected[i], 0.001);

  const Spectrum m7 = spectrum(smooth(cli::fixture("M7")));
  EXPECT_NEAR(m7.mus[4], -1.65, 0.01);
  EXPECT_NEAR(m7.lambdas[4], -0.104, 0.001);
  EXPECT_LT(m7.n_positive, 5u);
}

TEST(Eve, BoundaryCases) {
  for (std::size_t n = 2; n <= 10; ++n) {
    EXPECT_EQ(eve_score(ConfusionMatrix::from_matrix(Matrix::identity(n))), 1.0) << n;
    EXPECT_EQ(eve_score(ConfusionMatrix::from_matrix(Matrix::ones(n) * (1.0 / double(n)))), 0.0) << n;
  }
}

TEST(Eve, FixtureValues) {
  EXPECT_NEAR(eve_score(cli::fixture("M1")), 0.976, 0.001);
  EXPECT_NEAR(eve_score(cli::fixture("M2")), 0.952, 0.001);
  EXPECT_NEAR(eve_score(cli::fixture("M5")), 0.883, 0.001);
  EXPECT_NEAR(eve_score(cli::fixture("M8")), 0.996, 0.001);
  EXPECT_NEAR(eve_score(cli::fixture("M9")), 0.912, 0.001);
  EXPECT_NEAR(eve_score(cli::fixture("M7")), 0.77604, 0.0005);
  EXPECT_NEAR(eve_score(smooth(cli::fixture("M7"))), 0.77539, 0.0005);
}

TEST(Eve, EntropyIgnoresNonPositiveEigenvalues) {
  const std::vector<double> one_positive = {1.0, 0.0, -0.5};
  EXPECT_EQ(eigenvalue_entropy(one_positive), 0.0);
  const std::vector<double> none = {0.0, -1.0};
  EXPECT_EQ(eigenvalue_entropy(none), 0.0);
  const std::vector<double> two_equal = {0.5, 0.5, 1e-14};
  EXPECT_NEAR(eigenvalue_entropy(two_equal), std::log(2.0) / std::log(3.0), 1e-15);
  EXPECT_EQ(count_positive(two_equal), 2u);
}

TEST(Eve, NonIncreasingAlongHomotopyToUniform) {
  for (std::size_t n = 2; n <= 6; ++n) {
    const double m = 100.0 * double(n);
    double previous = 2.0;
    for (int k = 0; k < 20; ++k) {
      const double t = double(k) / 19.0;
      const Matrix mt = Matrix::identity(n) * ((1.0 - t) * m / double(n)) + Matrix::ones(n) * (t * m / double(n * n));
      const double e = eve_score(ConfusionMatrix::from_matrix(mt));
      EXPECT_LE(e, previous + 1e-12) << "n=" << n << " t=" << t;
      previous = e;
    }
    EXPECT_EQ(previous, 0.0);
  }
}

TEST(Theorems, FixturesSatisfyRankTraceAndPositivity) {
  for (const auto& m : spectral_fixtures()) {
    const auto d = derive(m);
    const Spectrum sp = spectrum(m);
    // Same rank for M, its estimate and P.
    EXPECT_EQ(matrix_rank(estimate(m).matrix()), matrix_rank(m.matrix()));
    EXPECT_EQ(matrix_rank(m.matrix()), matrix_rank(d.p));
    double sum = 0.0;
    for (double l : sp.lambdas) sum += l;
    EXPECT_LT(std::abs(sum - d.p.trace()), 1e-9);
    if (sp.diagonally_dominant) EXPECT_GT(sp.lambdas.back(), 0.0);
  }
}

TEST(Theorems, DominantStochasticMatricesHavePositiveSpectrum) {
  std::mt19937 rng(17);
  std::uniform_int_distribution<std::size_t> size(2, 6);
  for (int trial = 0; trial < 1000; ++trial) {
    const ConfusionMatrix m = testing::random_dominant(rng, size(rng));
    const Spectrum sp = spectrum(m);
    ASSERT_TRUE(sp.diagonally_dominant);
    ASSERT_GT(sp.lambdas.back(), 0.0);
  }
}

TEST(Theorems, RandomMatricesSatisfyTraceRankContainmentAndPerron) {
  std::mt19937 rng(19);
  for (int trial = 0; trial < 1000; ++trial) {
    const ConfusionMatrix m = testing::random_counts(rng);
    const auto d = derive(m);
    const Spectrum sp = spectrum(m);
    double sum = 0.0;
    for (double l : sp.lambdas) sum += l;
    ASSERT_LT(std::abs(sum - d.p.trace()), 1e-9);
    ASSERT_EQ(matrix_rank(m.matrix()), matrix_rank(d.p));
    ASSERT_EQ(matrix_rank(m.matrix()), matrix_rank(estimate(m).matrix()));
    for (double mu : sp.mus) {
      ASSERT_GE(mu, sp.thr_min - 1e-12);
      ASSERT_LE(mu, sp.thr_max + 1e-12);
    }
    ASSERT_LE(sp.lambdas.front(), sp.mus.front() + 1e-12);
    ASSERT_GE(sp.eve, 0.0);
    ASSERT_LE(sp.eve, 1.0);
  }
}

TEST(Binary, ClosedFormExamples) {
  const auto sym = binary_eigenvalues(Matrix::from_rows({{0.9, 0.1}, {0.1, 0.9}}));
  EXPECT_NEAR(sym.lambda1, 1.0, 1e-15);
  EXPECT_NEAR(sym.lambda2, 0.8, 1e-15);
  const auto half = binary_eigenvalues(Matrix::from_rows({{0.5, 0.5}, {0.5, 0.5}}));
  EXPECT_NEAR(half.lambda2, 0.0, 1e-15);
  const auto skew = binary_eigenvalues(Matrix::from_rows({{0.9, 0.9}, {0.1, 0.1}}));
  EXPECT_NEAR(skew.lambda1 * skew.lambda2, -0.16, 1e-12);
  EXPECT_THROW(binary_eigenvalues(Matrix::identity(3)), ContractViolation);
}

TEST(Binary, ClosedFormMatchesJacobi) {
  std::mt19937 rng(23);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int trial = 0; trial < 1000; ++trial) {
    const double p11 = u(rng), p22 = u(rng);
    const Matrix p = Matrix::from_rows({{p11, 1.0 - p22}, {1.0 - p11, p22}});
    const auto closed = binary_eigenvalues(p);
    const auto jacobi = jacobi_eigenvalues(symmetrized(p)).eigenvalues;
    ASSERT_NEAR(closed.lambda1, jacobi[0], 1e-12);
    ASSERT_NEAR(closed.lambda2, jacobi[1], 1e-12);
    ASSERT_GT(closed.lambda1, 0.0);
  }
}

TEST(Binary, EigenvaluesRelateToAucAndGini) {
  for (std::string_view id : testing::kBinaryFixtureIds) {
    const ConfusionMatrix m = cli::fixture(id);
    const auto be = binary_eigenvalues(column_stochastic(m));
    const auto bm = binary_measures(m);
    EXPECT_NEAR(*bm.auc, (be.lambda1 + be.lambda2) / 2.0, 1e-12) << id;
    EXPECT_NEAR(be.lambda1 * be.lambda2, *bm.gini - 0.25 * std::pow(*bm.sen - *bm.spe, 2), 1e-12) << id;
    EXPECT_NEAR(be.lambda1 - *bm.auc, -(be.lambda2 - *bm.auc), 1e-12) << id;
  }
}

TEST(Binary, LambdaTwoZeroBoundary) {
  EXPECT_NEAR(lambda2_zero_boundary(0.5), 0.5, 1e-15);
  EXPECT_NEAR(lambda2_zero_boundary(1.0), 3.0 - std::sqrt(8.0), 1e-15);
  EXPECT_THROW(lambda2_zero_boundary(0.0), ContractViolation);
  for (double p22 : {0.2, 0.5, 0.7, 0.9, 1.0}) {
    const double p11 = lambda2_zero_boundary(p22);
    const auto be = binary_eigenvalues(Matrix::from_rows({{p11, 1.0 - p22}, {1.0 - p11, p22}}));
    EXPECT_LT(std::abs(be.lambda2), 1e-9) << p22;
  }
}

}  // namespace
}  // namespace eve
