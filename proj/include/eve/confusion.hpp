#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "eve/densemat.hpp"

namespace eve {

/// Orientation used everywhere in this library: entry (i, j) is the mass of
/// observations whose TRUE class is j and whose PREDICTED class is i. Column
/// sums are therefore class sizes, and the column-stochastic matrix
/// P = M D^-1 holds per-class prediction rates (p_11 is the sensitivity of
/// class 1). Inputs laid out the other way round should be transposed first.
///
/// Entries are nonnegative reals: soft classifiers and the class-size
/// estimate both produce fractional masses.
class ConfusionMatrix {
 public:
  struct Options {
    /// Reject matrices with an empty class (zero column sum).
    bool require_nonempty_columns = false;
  };

  /// Validates and wraps a dense matrix: square, n >= 2, entries finite and
  /// >= 0, total > 0. Throws ValidationError naming the offending cell.
  static ConfusionMatrix from_dense(const std::vector<std::vector<double>>& rows, Options opts);
  static ConfusionMatrix from_dense(const std::vector<std::vector<double>>& rows);
  static ConfusionMatrix from_matrix(const Matrix& m, Options opts);
  static ConfusionMatrix from_matrix(const Matrix& m);

  /// Counts (true, predicted) label pairs. With `n` unset the class count
  /// is 1 + the largest label seen in either list.
  static ConfusionMatrix from_labels(std::span<const int> true_labels, std::span<const int> pred_labels,
                                     std::optional<std::size_t> n = std::nullopt);

  /// Accumulates membership rows. Each row is normalized to sum one and
  /// added to the column of its true class, so column sums are class sizes
  /// and the total equals the number of observations.
  static ConfusionMatrix from_soft(std::span<const int> true_labels,
                                   const std::vector<std::vector<double>>& memberships);

  std::size_t n() const noexcept { return m_.rows(); }
  double total() const noexcept { return total_; }
  double operator()(std::size_t i, std::size_t j) const { return m_(i, j); }
  const Matrix& matrix() const noexcept { return m_; }

  std::vector<double> row_sums() const { return m_.row_sums(); }
  std::vector<double> col_sums() const { return m_.col_sums(); }
  bool has_empty_column() const;
  bool is_integer_valued(double tol = 1e-9) const;

  ConfusionMatrix transposed() const;

  friend bool operator==(const ConfusionMatrix& a, const ConfusionMatrix& b) { return a.m_ == b.m_; }

 private:
  explicit ConfusionMatrix(Matrix m);

  Matrix m_;
  double total_ = 0.0;
};

/// M + J_n / n. Gives every cell positive mass so empty classes and zero
/// diagonal entries no longer block the spectral pipeline.
ConfusionMatrix smooth(const ConfusionMatrix& m);

/// Smallest class size over largest class size, class sizes being column
/// sums. Throws ValidationError on an empty class.
double imbalance_ratio(const ConfusionMatrix& m);

/// Class-size adjusted estimate D^{1/2} M D^{-1/2}, D = diag(column sums):
/// m~_ij = m_ij * sqrt(m_.i / m_.j). The diagonal is unchanged and the total
/// generally differs from the input total. Throws ValidationError on an
/// empty class; smoothing must be requested explicitly.
ConfusionMatrix estimate(const ConfusionMatrix& m);

}  // namespace eve
