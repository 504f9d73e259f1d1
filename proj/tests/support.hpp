#pragma once

#include <cstddef>
#include <random>
#include <string_view>
#include <vector>

#include "eve/confusion.hpp"
#include "eve/densemat.hpp"

namespace eve::testing {

inline constexpr std::string_view kFixtureIds[] = {"Ma", "Mb", "Mc", "M1", "M2", "M3",
                                                   "M4", "M5", "M6", "M7", "M8", "M9"};
inline constexpr std::string_view kBinaryFixtureIds[] = {"Ma", "Mb", "Mc", "M1", "M2", "M3"};
inline constexpr std::string_view kIntegerFixtureIds[] = {"Ma", "Mb", "Mc", "M1", "M2", "M3",
                                                          "M4", "M5", "M6", "M7", "M8"};

// Integer confusion matrix with every class non-empty. With `positive_diagonal`
// every diagonal cell is at least 1 so A can be formed.
inline ConfusionMatrix random_counts(std::mt19937& rng, std::size_t n, int max_count = 50,
                                     bool positive_diagonal = true) {
  std::uniform_int_distribution<int> cell(0, max_count);
  std::vector<std::vector<double>> rows(n, std::vector<double>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) rows[i][j] = cell(rng);
  for (std::size_t j = 0; j < n; ++j) {
    double column = 0.0;
    for (std::size_t i = 0; i < n; ++i) column += rows[i][j];
    if (positive_diagonal || column == 0.0) rows[j][j] += 1.0;
  }
  return ConfusionMatrix::from_dense(rows);
}

inline ConfusionMatrix random_counts(std::mt19937& rng, int max_count = 50) {
  std::uniform_int_distribution<std::size_t> size(2, 6);
  return random_counts(rng, size(rng), max_count);
}

// Real-valued matrix with strictly positive cells, like a soft classifier output.
inline ConfusionMatrix random_soft(std::mt19937& rng, std::size_t n) {
  std::uniform_real_distribution<double> cell(0.01, 10.0);
  std::vector<std::vector<double>> rows(n, std::vector<double>(n));
  for (auto& r : rows)
    for (auto& x : r) x = cell(rng);
  return ConfusionMatrix::from_dense(rows);
}

// Column-stochastic matrix whose diagonal beats each column's off-diagonal mass.
inline ConfusionMatrix random_dominant(std::mt19937& rng, std::size_t n) {
  std::uniform_real_distribution<double> diag(0.5 + 1e-6, 1.0);
  std::uniform_real_distribution<double> off(0.0, 1.0);
  std::vector<std::vector<double>> rows(n, std::vector<double>(n));
  for (std::size_t j = 0; j < n; ++j) {
    const double d = diag(rng);
    double sum = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      if (i == j) continue;
      rows[i][j] = off(rng);
      sum += rows[i][j];
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i != j) rows[i][j] = sum > 0.0 ? rows[i][j] * (1.0 - d) / sum : (1.0 - d) / double(n - 1);
    }
    rows[j][j] = d;
  }
  return ConfusionMatrix::from_dense(rows);
}

inline Matrix random_symmetric(std::mt19937& rng, std::size_t n, double scale = 10.0) {
  std::uniform_real_distribution<double> cell(-scale, scale);
  Matrix s(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      s(i, j) = cell(rng);
      s(j, i) = s(i, j);
    }
  }
  return s;
}

// Expands integer counts into (true, predicted) label lists.
inline void expand_labels(const ConfusionMatrix& m, std::vector<int>& truth, std::vector<int>& pred) {
  for (std::size_t i = 0; i < m.n(); ++i) {
    for (std::size_t j = 0; j < m.n(); ++j) {
      for (int k = 0; k < static_cast<int>(m(i, j)); ++k) {
        truth.push_back(static_cast<int>(j));
        pred.push_back(static_cast<int>(i));
      }
    }
  }
}

}  // namespace eve::testing
