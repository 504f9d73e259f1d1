#include "eve/confusion.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "eve/errors.hpp"

namespace eve {

namespace {

std::string cell(std::size_t i, std::size_t j) {
  return "row " + std::to_string(i + 1) + ", column " + std::to_string(j + 1);
}

void require_nonempty_columns(const Matrix& m, const char* who) {
  const auto cs = m.col_sums();
  for (std::size_t j = 0; j < cs.size(); ++j) {
    if (!(cs[j] > 0.0)) {
      throw ValidationError(std::string(who) + ": class " + std::to_string(j + 1) +
                            " is empty (zero column sum); apply smoothing (M + J/n) first");
    }
  }
}

}  // namespace

ConfusionMatrix::ConfusionMatrix(Matrix m) : m_(std::move(m)), total_(m_.sum()) {}

ConfusionMatrix ConfusionMatrix::from_matrix(const Matrix& m, Options opts) {
  if (!m.is_square()) {
    throw ValidationError("confusion matrix must be square, got " + std::to_string(m.rows()) + "x" +
                          std::to_string(m.cols()));
  }
  if (m.rows() < 2) throw ValidationError("confusion matrix needs at least 2 classes");
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) {
      const double v = m(i, j);
      if (!std::isfinite(v)) throw ValidationError("non-finite entry at " + cell(i, j));
      if (v < 0.0) throw ValidationError("negative entry at " + cell(i, j));
    }
  if (!(m.sum() > 0.0)) throw ValidationError("confusion matrix has no positive entry");
  if (opts.require_nonempty_columns) require_nonempty_columns(m, "confusion matrix");
  return ConfusionMatrix(m);
}

ConfusionMatrix ConfusionMatrix::from_matrix(const Matrix& m) { return from_matrix(m, Options{}); }

ConfusionMatrix ConfusionMatrix::from_dense(const std::vector<std::vector<double>>& rows, Options opts) {
  if (rows.empty()) throw ValidationError("confusion matrix is empty");
  const std::size_t n = rows.size();
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    if (rows[i].size() != n) {
      throw ValidationError("row " + std::to_string(i + 1) + " has " + std::to_string(rows[i].size()) +
                            " entries, expected " + std::to_string(n) + " (matrix must be square)");
    }
    for (std::size_t j = 0; j < n; ++j) m(i, j) = rows[i][j];
  }
  return from_matrix(m, opts);
}

ConfusionMatrix ConfusionMatrix::from_dense(const std::vector<std::vector<double>>& rows) {
  return from_dense(rows, Options{});
}

ConfusionMatrix ConfusionMatrix::from_labels(std::span<const int> true_labels, std::span<const int> pred_labels,
                                             std::optional<std::size_t> n) {
  if (true_labels.size() != pred_labels.size()) {
    throw ValidationError("label lists differ in length: " + std::to_string(true_labels.size()) + " true vs " +
                          std::to_string(pred_labels.size()) + " predicted");
  }
  if (true_labels.empty()) throw ValidationError("no labels");
  std::size_t classes = 0;
  if (n) {
    classes = *n;
  } else {
    int hi = 0;
    for (int v : true_labels) hi = std::max(hi, v);
    for (int v : pred_labels) hi = std::max(hi, v);
    classes = static_cast<std::size_t>(hi) + 1;
  }
  const auto check = [classes](int label, std::size_t pos, const char* which) {
    if (label < 0 || static_cast<std::size_t>(label) >= classes) {
      throw ValidationError(std::string(which) + " label " + std::to_string(label) + " at position " +
                            std::to_string(pos + 1) + " is outside [0, " + std::to_string(classes) + ")");
    }
  };
  Matrix m(classes, classes);
  for (std::size_t k = 0; k < true_labels.size(); ++k) {
    check(true_labels[k], k, "true");
    check(pred_labels[k], k, "predicted");
    m(static_cast<std::size_t>(pred_labels[k]), static_cast<std::size_t>(true_labels[k])) += 1.0;
  }
  return from_matrix(m);
}

ConfusionMatrix ConfusionMatrix::from_soft(std::span<const int> true_labels,
                                           const std::vector<std::vector<double>>& memberships) {
  if (true_labels.size() != memberships.size()) {
    throw ValidationError("label list and membership rows differ in length: " + std::to_string(true_labels.size()) +
                          " vs " + std::to_string(memberships.size()));
  }
  if (memberships.empty()) throw ValidationError("no observations");
  const std::size_t n = memberships.front().size();
  Matrix m(n, n);
  for (std::size_t r = 0; r < memberships.size(); ++r) {
    const auto& row = memberships[r];
    if (row.size() != n) {
      throw ValidationError("membership row " + std::to_string(r + 1) + " has " + std::to_string(row.size()) +
                            " values, expected " + std::to_string(n));
    }
    const int t = true_labels[r];
    if (t < 0 || static_cast<std::size_t>(t) >= n) {
      throw ValidationError("true label " + std::to_string(t) + " of row " + std::to_string(r + 1) +
                            " is outside [0, " + std::to_string(n) + ")");
    }
    double s = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
      if (!std::isfinite(row[j]) || row[j] < 0.0) {
        throw ValidationError("membership row " + std::to_string(r + 1) + " has a negative or non-finite value");
      }
      s += row[j];
    }
    if (!(s > 0.0)) throw ValidationError("membership row " + std::to_string(r + 1) + " is all zero");
    for (std::size_t j = 0; j < n; ++j) m(j, static_cast<std::size_t>(t)) += row[j] / s;
  }
  return from_matrix(m);
}

bool ConfusionMatrix::has_empty_column() const {
  const auto cs = m_.col_sums();
  return std::any_of(cs.begin(), cs.end(), [](double v) { return !(v > 0.0); });
}

bool ConfusionMatrix::is_integer_valued(double tol) const {
  const auto d = m_.data();
  return std::all_of(d.begin(), d.end(), [tol](double v) { return std::abs(v - std::round(v)) <= tol; });
}

ConfusionMatrix ConfusionMatrix::transposed() const { return ConfusionMatrix(m_.transposed()); }

ConfusionMatrix smooth(const ConfusionMatrix& m) {
  const double n = static_cast<double>(m.n());
  return ConfusionMatrix::from_matrix(m.matrix() + Matrix::ones(m.n()) * (1.0 / n));
}

double imbalance_ratio(const ConfusionMatrix& m) {
  require_nonempty_columns(m.matrix(), "imbalance_ratio");
  const auto cs = m.col_sums();
  const auto [lo, hi] = std::minmax_element(cs.begin(), cs.end());
  return *lo / *hi;
}

ConfusionMatrix estimate(const ConfusionMatrix& m) {
  require_nonempty_columns(m.matrix(), "estimate");
  const auto cs = m.col_sums();
  Matrix out = m.matrix();
  for (std::size_t i = 0; i < m.n(); ++i)
    for (std::size_t j = 0; j < m.n(); ++j)
      if (i != j) out(i, j) *= std::sqrt(cs[i] / cs[j]);
  return ConfusionMatrix::from_matrix(out);
}

}  // namespace eve
