#pragma once

// Small dense row-major matrix and the two numerical kernels the rest of the
// library needs: a cyclic Jacobi eigenvalue solver for symmetric matrices and
// a numerical rank. Matrices here are n x n with n = number of classes, so
// nothing is tuned for size.

#include <cstddef>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace eve {

class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, double fill = 0.0);

  /// Throws ContractViolation on ragged rows or non-finite entries.
  static Matrix from_rows(const std::vector<std::vector<double>>& rows);
  static Matrix from_rows(std::initializer_list<std::initializer_list<double>> rows);
  static Matrix identity(std::size_t n);
  /// The all-ones matrix J_n.
  static Matrix ones(std::size_t n);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool empty() const noexcept { return data_.empty(); }
  bool is_square() const noexcept { return rows_ == cols_; }

  double operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
  double& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }

  std::span<const double> data() const noexcept { return data_; }
  std::span<const double> row(std::size_t i) const { return {data_.data() + i * cols_, cols_}; }

  std::vector<double> row_sums() const;
  std::vector<double> col_sums() const;
  double sum() const;
  double trace() const;
  double frobenius_norm() const;
  double max_abs() const;
  bool all_finite() const;
  bool is_symmetric(double rel_tol) const;

  Matrix transposed() const;

  Matrix& operator+=(const Matrix& other);
  Matrix& operator-=(const Matrix& other);
  Matrix& operator*=(double s);

  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
  friend Matrix operator*(Matrix a, double s) { return a *= s; }
  friend Matrix operator*(double s, Matrix a) { return a *= s; }
  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend bool operator==(const Matrix& a, const Matrix& b) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<double> data_;
};

struct EigenResult {
  std::vector<double> eigenvalues;  // non-increasing
  int sweeps_used = 0;
  double off_diag_norm = 0.0;
};

/// Thrown when Jacobi does not reach the requested tolerance; carries the
/// diagonal at the point of giving up.
class ConvergenceError : public std::runtime_error {
 public:
  ConvergenceError(const std::string& what, EigenResult partial)
      : std::runtime_error(what), partial_(std::move(partial)) {}
  const EigenResult& partial() const noexcept { return partial_; }

 private:
  EigenResult partial_;
};

inline constexpr double kJacobiTolerance = 1e-12;
inline constexpr int kJacobiMaxSweeps = 100;
inline constexpr double kSymmetryTolerance = 1e-12;
inline constexpr double kRankTolerance = 1e-10;

/// Eigenvalues of a symmetric matrix by cyclic Jacobi rotations.
///
/// Converged once the off-diagonal Frobenius norm is at most
/// `tol * ||s||_F`. Requires `s` square and symmetric to `kSymmetryTolerance`
/// relative to its largest entry (ContractViolation otherwise). Throws
/// ConvergenceError after `max_sweeps` sweeps without convergence.
EigenResult jacobi_eigenvalues(const Matrix& s, double tol = kJacobiTolerance,
                               int max_sweeps = kJacobiMaxSweeps);

/// Numerical rank by Gaussian elimination with partial pivoting. A pivot
/// counts when its magnitude exceeds `tol * max|m_ij|`.
std::size_t matrix_rank(const Matrix& m, double tol = kRankTolerance);

/// Determinant via LU with partial pivoting.
double determinant(const Matrix& m);

std::string to_string(const Matrix& m, int precision = 6);

}  // namespace eve
