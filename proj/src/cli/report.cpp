#include "eve/cli/report.hpp"

#include <fmt/format.h>

#include <json.hpp>

#include "eve/densemat.hpp"
#include "eve/errors.hpp"
#include "eve/spectral.hpp"

namespace eve::cli {

namespace {

using nlohmann::json;

json value_json(const std::optional<double>& v) { return v ? json(*v) : json(nullptr); }

json matrix_json(const MatrixSummary& m) {
  return {{"n", m.n}, {"total", m.total}, {"ir", value_json(m.ir)}};
}

json spectrum_json(const std::optional<SpectrumSummary>& s) {
  if (!s) return nullptr;
  return {{"lambdas", s->lambdas},
          {"mus", s->mus ? json(*s->mus) : json(nullptr)},
          {"thr_min", value_json(s->thr_min)},
          {"thr_max", value_json(s->thr_max)},
          {"dominant", s->dominant}};
}

json measures_json(const MeasureValues& values) {
  json out = json::object();
  for (const auto& [name, v] : values.items()) out[name] = value_json(v);
  return out;
}

json evaluation_json(const Evaluation& e) {
  json out = {{"matrix", matrix_json(e.matrix)},
              {"source", std::string(to_string(e.measures.source))},
              {"spectrum", spectrum_json(e.spectrum)},
              {"measures", measures_json(e.measures.values)}};
  if (!e.measures.unsupported.empty()) out["unsupported"] = e.measures.unsupported;
  if (e.pairs) {
    out["pairs"] = {{"a", e.pairs->a},
                    {"b", e.pairs->b},
                    {"c", e.pairs->c},
                    {"d", e.pairs->d},
                    {"m_pairs", e.pairs->m_pairs},
                    {"formula", e.pair_formula}};
  }
  return out;
}

std::string fmt_value(const std::optional<double>& v) { return v ? fmt::format("{:.4f}", *v) : "NA"; }

std::string fmt_list(const std::vector<double>& v) {
  std::string out;
  for (double x : v) out += fmt::format("{}{:.4f}", out.empty() ? "" : " ", x);
  return out;
}

void append_block(std::string& out, const Evaluation& e) {
  out += fmt::format("matrix    n={} total={} ir={}\n", e.matrix.n, e.matrix.total, fmt_value(e.matrix.ir));
  out += fmt::format("source    {}\n", to_string(e.measures.source));
  if (e.pairs) {
    out += fmt::format("pairs     a={} b={} c={} d={} ({} identities)\n", e.pairs->a, e.pairs->b, e.pairs->c,
                       e.pairs->d, e.pair_formula);
  }
  if (e.spectrum) {
    out += fmt::format("lambda    {}\n", fmt_list(e.spectrum->lambdas));
    if (e.spectrum->mus) {
      out += fmt::format("mu        {}\n", fmt_list(*e.spectrum->mus));
      out += fmt::format("bounds    [{:.4f}, {:.4f}]\n", *e.spectrum->thr_min, *e.spectrum->thr_max);
    } else {
      out += "mu        NA (zero diagonal entry; use --smooth)\n";
    }
    out += fmt::format("dominant  {}\n", e.spectrum->dominant ? "yes" : "no");
  }
  for (const auto& [name, v] : e.measures.values.items()) out += fmt::format("{:<9} {}\n", name, fmt_value(v));
  for (const auto& name : e.measures.unsupported) out += fmt::format("{:<9} unsupported\n", name);
}

void append_tolerances(std::string& out) {
  out += fmt::format("tolerances jacobi={:g} positive_cutoff={:g}*n rank={:g} symmetry={:g}\n", kJacobiTolerance,
                     kPositiveCutoff, kRankTolerance, kSymmetryTolerance);
}

}  // namespace

MatrixSummary summarize_matrix(const ConfusionMatrix& m) {
  MatrixSummary s{m.n(), m.total(), std::nullopt};
  if (!m.has_empty_column()) s.ir = imbalance_ratio(m);
  return s;
}

std::optional<SpectrumSummary> summarize_spectrum(const ConfusionMatrix& m) {
  if (m.has_empty_column()) return std::nullopt;
  const Matrix p = column_stochastic(m);
  const Matrix b = symmetrized(p);
  SpectrumSummary s{};
  s.lambdas = jacobi_eigenvalues(b).eigenvalues;
  s.dominant = is_diagonally_dominant(p);
  bool positive_diagonal = true;
  for (std::size_t i = 0; i < b.rows(); ++i) positive_diagonal = positive_diagonal && b(i, i) > 0.0;
  if (positive_diagonal) {
    const Matrix a = diagonal_normalized(b);
    s.mus = jacobi_eigenvalues(a).eigenvalues;
    const auto bounds = gershgorin_bounds(a);
    s.thr_min = bounds.thr_min;
    s.thr_max = bounds.thr_max;
  }
  return s;
}

std::string render_json(const Evaluation& e, ToleranceEcho echo) {
  json out = evaluation_json(e);
  if (!e.per_class.empty()) {
    json classes = json::array();
    for (std::size_t j = 0; j < e.per_class.size(); ++j) {
      json c = evaluation_json(e.per_class[j]);
      c["class"] = j + 1;
      classes.push_back(std::move(c));
    }
    out["per_class"] = std::move(classes);
  }
  if (echo.enabled) {
    out["tolerances"] = {{"jacobi", kJacobiTolerance},
                         {"positive_cutoff_per_class", kPositiveCutoff},
                         {"rank", kRankTolerance},
                         {"symmetry", kSymmetryTolerance}};
  }
  return out.dump(2) + "\n";
}

std::string render_text(const Evaluation& e, ToleranceEcho echo) {
  std::string out;
  append_block(out, e);
  if (!e.per_class.empty()) {
    out += "\none-vs-rest\n";
    out += fmt::format("{:<9}", "class");
    for (std::size_t j = 0; j < e.per_class.size(); ++j) out += fmt::format(" {:>8}", j + 1);
    out += '\n';
    for (const auto& [name, unused] : e.per_class.front().measures.values.items()) {
      out += fmt::format("{:<9}", name);
      for (const auto& c : e.per_class) out += fmt::format(" {:>8}", fmt_value(c.measures.values.at(name)));
      out += '\n';
    }
  }
  if (echo.enabled) append_tolerances(out);
  return out;
}

}  // namespace eve::cli
