#include "eve/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "eve/errors.hpp"

namespace eve {

Matrix column_stochastic(const ConfusionMatrix& m) {
  const auto cs = m.col_sums();
  Matrix p = m.matrix();
  for (std::size_t j = 0; j < m.n(); ++j) {
    if (!(cs[j] > 0.0)) {
      throw ValidationError("class " + std::to_string(j + 1) +
                            " is empty (zero column sum); apply smoothing (M + J/n) first");
    }
    for (std::size_t i = 0; i < m.n(); ++i) p(i, j) /= cs[j];
  }
  return p;
}

Matrix symmetrized(const Matrix& p) {
  if (!p.is_square()) throw ContractViolation("symmetrized: matrix is not square");
  Matrix b(p.rows(), p.cols());
  for (std::size_t i = 0; i < p.rows(); ++i)
    for (std::size_t j = 0; j < p.cols(); ++j) b(i, j) = 0.5 * (p(i, j) + p(j, i));
  return b;
}

Matrix diagonal_normalized(const Matrix& b) {
  if (!b.is_square()) throw ContractViolation("diagonal_normalized: matrix is not square");
  const std::size_t n = b.rows();
  std::vector<double> root(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (!(b(i, i) > 0.0)) {
      throw ValidationError("diagonal entry " + std::to_string(i + 1) +
                            " is zero; apply smoothing (M + J/n) before forming A");
    }
    root[i] = std::sqrt(b(i, i));
  }
  Matrix a(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a(i, j) = (i == j) ? 1.0 : b(i, j) / (root[i] * root[j]);
  return a;
}

DerivedMatrices derive(const ConfusionMatrix& m) {
  DerivedMatrices d;
  d.p = column_stochastic(m);
  d.b = symmetrized(d.p);
  d.a = diagonal_normalized(d.b);
  d.m_tilde = estimate(m).matrix();
  return d;
}

bool is_diagonally_dominant(const Matrix& p) {
  for (std::size_t j = 0; j < p.cols(); ++j) {
    double off = 0.0;
    for (std::size_t i = 0; i < p.rows(); ++i)
      if (i != j) off += p(i, j);
    if (!(p(j, j) > off)) return false;
  }
  return true;
}

GershgorinBounds gershgorin_bounds(const Matrix& a) {
  double r = 0.0;
  for (std::size_t i = 0; i < a.rows(); ++i) {
    double ri = 0.0;
    for (std::size_t j = 0; j < a.cols(); ++j)
      if (i != j) ri += std::abs(a(i, j));
    r = std::max(r, ri);
  }
  return {1.0 - r, 1.0 + r};
}

std::size_t count_positive(std::span<const double> eigenvalues) {
  const double cutoff = kPositiveCutoff * static_cast<double>(eigenvalues.size());
  return static_cast<std::size_t>(
      std::count_if(eigenvalues.begin(), eigenvalues.end(), [cutoff](double l) { return l > cutoff; }));
}

double eigenvalue_entropy(std::span<const double> eigenvalues) {
  const std::size_t n = eigenvalues.size();
  if (n < 2) return 0.0;
  const double cutoff = kPositiveCutoff * static_cast<double>(n);
  double total = 0.0;
  double weighted_log = 0.0;
  std::size_t positive = 0;
  for (double l : eigenvalues) {
    if (l > cutoff) {
      total += l;
      weighted_log += l * std::log(l);
      ++positive;
    }
  }
  if (positive < 2) return 0.0;
  // -sum eta log eta with eta = l / total, rearranged as
  // log(total) - sum(l log l) / total.
  const double h = std::log(total) - weighted_log / total;
  return std::clamp(h / std::log(static_cast<double>(n)), 0.0, 1.0);
}

std::vector<double> b_eigenvalues(const ConfusionMatrix& m) {
  return jacobi_eigenvalues(symmetrized(column_stochastic(m))).eigenvalues;
}

double eve_score(const ConfusionMatrix& m) { return eigenvalue_entropy(b_eigenvalues(m)); }

Spectrum spectrum(const ConfusionMatrix& m) {
  const Matrix p = column_stochastic(m);
  const Matrix b = symmetrized(p);
  const Matrix a = diagonal_normalized(b);
  Spectrum s;
  s.lambdas = jacobi_eigenvalues(b).eigenvalues;
  s.mus = jacobi_eigenvalues(a).eigenvalues;
  const auto bounds = gershgorin_bounds(a);
  s.thr_min = bounds.thr_min;
  s.thr_max = bounds.thr_max;
  s.diagonally_dominant = is_diagonally_dominant(p);
  s.n_positive = count_positive(s.lambdas);
  s.eve = eigenvalue_entropy(s.lambdas);
  return s;
}

BinaryEigenvalues binary_eigenvalues(const Matrix& p) {
  if (p.rows() != 2 || p.cols() != 2) throw ContractViolation("binary_eigenvalues: P must be 2x2");
  const double half_trace = 0.5 * (p(0, 0) + p(1, 1));
  const double radius = 0.5 * std::hypot(p(0, 0) - p(1, 1), p(0, 1) + p(1, 0));
  return {half_trace + radius, half_trace - radius};
}

double lambda2_zero_boundary(double p22) {
  if (!(p22 > 0.0) || p22 > 1.0) throw ContractViolation("lambda2_zero_boundary: p22 must lie in (0, 1]");
  return p22 + 2.0 - std::sqrt(8.0 * p22);
}

}  // namespace eve
