#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "eve/confusion.hpp"
#include "eve/densemat.hpp"

namespace eve {

/// The matrices built from one confusion matrix M with column sums D:
///   p       = M D^-1                  (column-stochastic)
///   b       = (p + p^T) / 2           (symmetric, real spectrum)
///   a       = Q^-1/2 b Q^-1/2         (Q = diag(b), unit diagonal)
///   m_tilde = D^1/2 M D^-1/2          (class-size adjusted estimate)
struct DerivedMatrices {
  Matrix p;
  Matrix b;
  Matrix a;
  Matrix m_tilde;
};

/// p_ij = m_ij / m_.j. Throws ValidationError on an empty class.
Matrix column_stochastic(const ConfusionMatrix& m);
Matrix symmetrized(const Matrix& p);
/// a_ij = b_ij / sqrt(b_ii b_jj). Throws ValidationError when some b_ii is
/// not positive, which happens exactly when a diagonal cell of M is zero.
Matrix diagonal_normalized(const Matrix& b);

DerivedMatrices derive(const ConfusionMatrix& m);

/// p_jj > sum_{i != j} p_ij for every column j (strict).
bool is_diagonally_dominant(const Matrix& p);

struct GershgorinBounds {
  double thr_min = 0.0;
  double thr_max = 0.0;
};

/// Every Gershgorin disc of a unit-diagonal matrix is centred at 1, so all
/// eigenvalues lie in [1 - r, 1 + r] with r the largest off-diagonal
/// absolute row sum.
GershgorinBounds gershgorin_bounds(const Matrix& a);

struct Spectrum {
  std::vector<double> lambdas;  // sigma(B), non-increasing
  std::vector<double> mus;      // sigma(A), non-increasing
  double thr_min = 0.0;
  double thr_max = 0.0;
  bool diagonally_dominant = false;
  std::size_t n_positive = 0;
  double eve = 0.0;
};

/// An eigenvalue counts as positive when it exceeds this times n.
inline constexpr double kPositiveCutoff = 1e-12;

Spectrum spectrum(const ConfusionMatrix& m);

/// sigma(B) alone. Unlike spectrum(), this does not need A, so it works for
/// matrices with a zero diagonal cell.
std::vector<double> b_eigenvalues(const ConfusionMatrix& m);

/// Number of eigenvalues strictly above the positive cutoff.
std::size_t count_positive(std::span<const double> eigenvalues);

/// Standardized entropy (base n, n = eigenvalues.size()) of the positive
/// eigenvalues normalized to sum one. Non-positive eigenvalues are
/// ignored; no positive eigenvalue or a single one gives 0.
double eigenvalue_entropy(std::span<const double> eigenvalues);

/// The eigenvalues-entropy score of M: eigenvalue_entropy(sigma(B)).
/// 1 for a perfect classifier, 0 when every class is spread uniformly.
double eve_score(const ConfusionMatrix& m);

struct BinaryEigenvalues {
  double lambda1 = 0.0;
  double lambda2 = 0.0;
};

/// Closed-form eigenvalues of B for a 2x2 column-stochastic P:
/// ((p11 + p22) +- sqrt((p11 - p22)^2 + (p12 + p21)^2)) / 2.
BinaryEigenvalues binary_eigenvalues(const Matrix& p);

/// The p11 at which lambda2 vanishes for a given p22 in (0, 1]:
/// p11 = p22 + 2 - sqrt(8 p22). Below the curve lambda2 is negative.
double lambda2_zero_boundary(double p22);

}  // namespace eve
