#include "eve/densemat.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>
#include <sstream>
#include <iomanip>

#include "eve/errors.hpp"

namespace eve {

Matrix::Matrix(std::size_t rows, std::size_t cols, double fill)
    : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

Matrix Matrix::from_rows(const std::vector<std::vector<double>>& rows) {
  if (rows.empty()) return {};
  const std::size_t ncols = rows.front().size();
  Matrix out(rows.size(), ncols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != ncols) {
      throw ContractViolation("row " + std::to_string(i) + " has " + std::to_string(rows[i].size()) +
                              " entries, expected " + std::to_string(ncols));
    }
    for (std::size_t j = 0; j < ncols; ++j) {
      if (!std::isfinite(rows[i][j])) {
        throw ContractViolation("non-finite entry at (" + std::to_string(i) + ", " + std::to_string(j) + ")");
      }
      out(i, j) = rows[i][j];
    }
  }
  return out;
}

Matrix Matrix::from_rows(std::initializer_list<std::initializer_list<double>> rows) {
  std::vector<std::vector<double>> v;
  v.reserve(rows.size());
  for (const auto& r : rows) v.emplace_back(r);
  return from_rows(v);
}

Matrix Matrix::identity(std::size_t n) {
  Matrix out(n, n);
  for (std::size_t i = 0; i < n; ++i) out(i, i) = 1.0;
  return out;
}

Matrix Matrix::ones(std::size_t n) { return Matrix(n, n, 1.0); }

std::vector<double> Matrix::row_sums() const {
  std::vector<double> out(rows_, 0.0);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) out[i] += (*this)(i, j);
  return out;
}

std::vector<double> Matrix::col_sums() const {
  std::vector<double> out(cols_, 0.0);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) out[j] += (*this)(i, j);
  return out;
}

double Matrix::sum() const { return std::accumulate(data_.begin(), data_.end(), 0.0); }

double Matrix::trace() const {
  double t = 0.0;
  for (std::size_t i = 0; i < std::min(rows_, cols_); ++i) t += (*this)(i, i);
  return t;
}

double Matrix::frobenius_norm() const {
  double s = 0.0;
  for (double v : data_) s += v * v;
  return std::sqrt(s);
}

double Matrix::max_abs() const {
  double m = 0.0;
  for (double v : data_) m = std::max(m, std::abs(v));
  return m;
}

bool Matrix::all_finite() const {
  return std::all_of(data_.begin(), data_.end(), [](double v) { return std::isfinite(v); });
}

bool Matrix::is_symmetric(double rel_tol) const {
  if (!is_square()) return false;
  const double bound = rel_tol * max_abs();
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = i + 1; j < cols_; ++j)
      if (std::abs((*this)(i, j) - (*this)(j, i)) > bound) return false;
  return true;
}

Matrix Matrix::transposed() const {
  Matrix out(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) out(j, i) = (*this)(i, j);
  return out;
}

namespace {

void require_same_shape(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw ContractViolation("matrix shape mismatch");
}

}  // namespace

Matrix& Matrix::operator+=(const Matrix& other) {
  require_same_shape(*this, other);
  std::transform(data_.begin(), data_.end(), other.data_.begin(), data_.begin(), std::plus<>{});
  return *this;
}

Matrix& Matrix::operator-=(const Matrix& other) {
  require_same_shape(*this, other);
  std::transform(data_.begin(), data_.end(), other.data_.begin(), data_.begin(), std::minus<>{});
  return *this;
}

Matrix& Matrix::operator*=(double s) {
  for (double& v : data_) v *= s;
  return *this;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols() != b.rows()) throw ContractViolation("inner dimensions differ in matrix product");
  Matrix out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const double aik = a(i, k);
      for (std::size_t j = 0; j < b.cols(); ++j) out(i, j) += aik * b(k, j);
    }
  return out;
}

namespace {

double off_diagonal_norm(const Matrix& a) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      if (i != j) s += a(i, j) * a(i, j);
  return std::sqrt(s);
}

// One Jacobi rotation A <- J^T A J annihilating a(p, q).
void rotate(Matrix& a, std::size_t p, std::size_t q) {
  const double apq = a(p, q);
  const double tau = (a(q, q) - a(p, p)) / (2.0 * apq);
  const double t = (tau >= 0.0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
  const double c = 1.0 / std::sqrt(1.0 + t * t);
  const double s = t * c;
  const std::size_t n = a.rows();
  for (std::size_t k = 0; k < n; ++k) {
    const double akp = a(k, p);
    const double akq = a(k, q);
    a(k, p) = c * akp - s * akq;
    a(k, q) = s * akp + c * akq;
  }
  for (std::size_t k = 0; k < n; ++k) {
    const double apk = a(p, k);
    const double aqk = a(q, k);
    a(p, k) = c * apk - s * aqk;
    a(q, k) = s * apk + c * aqk;
  }
  a(p, q) = 0.0;
  a(q, p) = 0.0;
}

EigenResult collect(const Matrix& a, int sweeps, double off) {
  EigenResult r;
  r.eigenvalues.reserve(a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i) r.eigenvalues.push_back(a(i, i));
  std::sort(r.eigenvalues.begin(), r.eigenvalues.end(), std::greater<>{});
  r.sweeps_used = sweeps;
  r.off_diag_norm = off;
  return r;
}

}  // namespace

EigenResult jacobi_eigenvalues(const Matrix& s, double tol, int max_sweeps) {
  if (!s.is_square()) throw ContractViolation("jacobi_eigenvalues: matrix is not square");
  if (!s.all_finite()) throw ContractViolation("jacobi_eigenvalues: non-finite entry");
  if (!s.is_symmetric(kSymmetryTolerance)) throw ContractViolation("jacobi_eigenvalues: matrix is not symmetric");
  if (!(tol > 0.0)) throw ContractViolation("jacobi_eigenvalues: tolerance must be positive");

  // Symmetrize exactly so that rounding in the input never drifts.
  Matrix a = s;
  const std::size_t n = a.rows();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      const double m = 0.5 * (a(i, j) + a(j, i));
      a(i, j) = m;
      a(j, i) = m;
    }

  const double threshold = tol * a.frobenius_norm();
  double off = off_diagonal_norm(a);
  int sweep = 0;
  while (off > threshold) {
    if (sweep == max_sweeps) {
      throw ConvergenceError("jacobi_eigenvalues: no convergence after " + std::to_string(max_sweeps) + " sweeps",
                             collect(a, sweep, off));
    }
    for (std::size_t p = 0; p + 1 < n; ++p)
      for (std::size_t q = p + 1; q < n; ++q)
        if (a(p, q) != 0.0) rotate(a, p, q);
    ++sweep;
    off = off_diagonal_norm(a);
  }
  return collect(a, sweep, off);
}

std::size_t matrix_rank(const Matrix& m, double tol) {
  if (m.empty()) return 0;
  const double scale = m.max_abs();
  if (scale == 0.0) return 0;
  const double threshold = tol * scale;

  Matrix a = m;
  std::size_t rank = 0;
  for (std::size_t col = 0; col < a.cols() && rank < a.rows(); ++col) {
    std::size_t pivot = rank;
    for (std::size_t i = rank + 1; i < a.rows(); ++i)
      if (std::abs(a(i, col)) > std::abs(a(pivot, col))) pivot = i;
    if (std::abs(a(pivot, col)) <= threshold) continue;
    if (pivot != rank)
      for (std::size_t j = 0; j < a.cols(); ++j) std::swap(a(pivot, j), a(rank, j));
    for (std::size_t i = rank + 1; i < a.rows(); ++i) {
      const double f = a(i, col) / a(rank, col);
      if (f == 0.0) continue;
      for (std::size_t j = col; j < a.cols(); ++j) a(i, j) -= f * a(rank, j);
    }
    ++rank;
  }
  return rank;
}

double determinant(const Matrix& m) {
  if (!m.is_square()) throw ContractViolation("determinant: matrix is not square");
  Matrix a = m;
  const std::size_t n = a.rows();
  double det = 1.0;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    for (std::size_t i = col + 1; i < n; ++i)
      if (std::abs(a(i, col)) > std::abs(a(pivot, col))) pivot = i;
    if (a(pivot, col) == 0.0) return 0.0;
    if (pivot != col) {
      for (std::size_t j = 0; j < n; ++j) std::swap(a(pivot, j), a(col, j));
      det = -det;
    }
    det *= a(col, col);
    for (std::size_t i = col + 1; i < n; ++i) {
      const double f = a(i, col) / a(col, col);
      for (std::size_t j = col; j < n; ++j) a(i, j) -= f * a(col, j);
    }
  }
  return det;
}

std::string to_string(const Matrix& m, int precision) {
  std::ostringstream os;
  os << std::setprecision(precision);
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) os << (j ? " " : "") << m(i, j);
    os << '\n';
  }
  return os.str();
}

}  // namespace eve
