#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "eve/confusion.hpp"
#include "eve/convert.hpp"
#include "eve/measures.hpp"

namespace eve::cli {

struct MatrixSummary {
  std::size_t n = 0;
  double total = 0.0;
  std::optional<double> ir;  // absent when a class is empty
};

/// Spectrum fields that could be computed. `mus` and the bounds need A,
/// which does not exist when a diagonal cell is zero.
struct SpectrumSummary {
  std::vector<double> lambdas;
  std::optional<std::vector<double>> mus;
  std::optional<double> thr_min;
  std::optional<double> thr_max;
  bool dominant = false;
};

struct Evaluation {
  MatrixSummary matrix;
  std::optional<SpectrumSummary> spectrum;
  MeasureReport measures;
  std::optional<BinaryCounts> pairs;
  std::string pair_formula;  // "corrected" or "uncorrected" when pairs is set
  std::vector<Evaluation> per_class;
};

MatrixSummary summarize_matrix(const ConfusionMatrix& m);
/// Spectrum of the matrix as given; std::nullopt when a class is empty.
std::optional<SpectrumSummary> summarize_spectrum(const ConfusionMatrix& m);

struct ToleranceEcho {
  bool enabled = false;
};

std::string render_json(const Evaluation& e, ToleranceEcho echo = {});
std::string render_text(const Evaluation& e, ToleranceEcho echo = {});

}  // namespace eve::cli
