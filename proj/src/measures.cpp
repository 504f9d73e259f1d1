#include "eve/measures.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "eve/errors.hpp"
#include "eve/spectral.hpp"

namespace eve {

namespace {

constexpr std::string_view kBinaryOnly[] = {"sen", "spe", "pre", "ipre", "f1s", "fmi", "auc", "gini"};

MeasureValue ratio(double num, double den) {
  if (den == 0.0) return std::nullopt;
  return num / den;
}

// -x log(x) / log(base) with 0 log 0 = 0.
double xlogx(double x, double base) { return x > 0.0 ? -x * std::log(x) / std::log(base) : 0.0; }

struct Marginals {
  double m = 0.0;
  double diag = 0.0;
  std::vector<double> rows;
  std::vector<double> cols;
};

Marginals marginals(const ConfusionMatrix& cm) {
  Marginals g;
  g.m = cm.total();
  g.diag = cm.matrix().trace();
  g.rows = cm.row_sums();
  g.cols = cm.col_sums();
  return g;
}

}  // namespace

bool is_binary_only(std::string_view name) {
  return std::find(std::begin(kBinaryOnly), std::end(kBinaryOnly), name) != std::end(kBinaryOnly);
}

bool is_known_measure(std::string_view name) {
  return std::find(std::begin(kMeasureNames), std::end(kMeasureNames), name) != std::end(kMeasureNames);
}

void MeasureValues::set(std::string_view name, MeasureValue v) {
  if (v && !std::isfinite(*v)) v.reset();
  for (auto& [k, val] : items_) {
    if (k == name) {
      val = v;
      return;
    }
  }
  items_.emplace_back(std::string(name), v);
}

bool MeasureValues::contains(std::string_view name) const {
  return std::any_of(items_.begin(), items_.end(), [name](const auto& kv) { return kv.first == name; });
}

MeasureValue MeasureValues::at(std::string_view name) const {
  for (const auto& [k, v] : items_)
    if (k == name) return v;
  throw std::out_of_range("measure not in report: " + std::string(name));
}

std::string_view to_string(Source s) { return s == Source::raw ? "raw" : "estimate"; }

MeasureSelection MeasureSelection::all() {
  MeasureSelection s;
  for (auto n : kMeasureNames) s.names_.emplace_back(n);
  return s;
}

MeasureSelection MeasureSelection::binary() {
  MeasureSelection s;
  for (auto n : kBinaryOnly) s.names_.emplace_back(n);
  return s;
}

MeasureSelection MeasureSelection::multiclass() {
  MeasureSelection s;
  for (auto n : kMeasureNames)
    if (!is_binary_only(n)) s.names_.emplace_back(n);
  return s;
}

MeasureSelection MeasureSelection::parse(std::span<const std::string> names) {
  MeasureSelection s;
  auto add = [&s](std::string_view n) {
    if (!s.includes(n)) s.names_.emplace_back(n);
  };
  for (const auto& name : names) {
    if (name == "all") {
      for (const auto& n : all().names_) add(n);
    } else if (name == "binary") {
      for (const auto& n : binary().names_) add(n);
    } else if (name == "multiclass") {
      for (const auto& n : multiclass().names_) add(n);
    } else if (is_known_measure(name)) {
      add(name);
    } else {
      throw ValidationError("unknown measure '" + name + "'");
    }
  }
  // Keep canonical order regardless of how the list was written.
  std::vector<std::string> ordered;
  for (auto n : kMeasureNames)
    if (s.includes(n)) ordered.emplace_back(n);
  s.names_ = std::move(ordered);
  return s;
}

bool MeasureSelection::includes(std::string_view name) const {
  return std::find(names_.begin(), names_.end(), name) != names_.end();
}

BinaryMeasures binary_measures(const ConfusionMatrix& m) {
  if (m.n() != 2) throw ContractViolation("binary measures need a 2x2 confusion matrix");
  const double tp = m(0, 0);
  const double fp = m(0, 1);
  const double fn = m(1, 0);
  const double tn = m(1, 1);

  BinaryMeasures b;
  b.sen = ratio(tp, tp + fn);
  b.spe = ratio(tn, tn + fp);
  b.pre = ratio(tp, tp + fp);
  b.ipre = ratio(tn, tn + fn);
  if (b.sen && b.pre) {
    b.f1s = ratio(2.0 * *b.pre * *b.sen, *b.pre + *b.sen);
    b.fmi = std::sqrt(*b.sen * *b.pre);
  }
  if (b.sen && b.spe) {
    b.auc = 0.5 * (*b.sen + *b.spe);
    b.gini = 2.0 * *b.auc - 1.0;
  }
  return b;
}

BinaryMeasures adjusted_binary_measures(const ConfusionMatrix& m) { return binary_measures(estimate(m)); }

MeasureValue accuracy(const ConfusionMatrix& m) { return ratio(m.matrix().trace(), m.total()); }

MeasureValue cohen_kappa(const ConfusionMatrix& cm) {
  const auto g = marginals(cm);
  double chance = 0.0;
  for (std::size_t i = 0; i < cm.n(); ++i) chance += g.rows[i] * g.cols[i];
  return ratio(g.m * g.diag - chance, g.m * g.m - chance);
}

MeasureValue mcc(const ConfusionMatrix& cm) {
  const auto g = marginals(cm);
  double chance = 0.0;
  double rows2 = 0.0;
  double cols2 = 0.0;
  for (std::size_t i = 0; i < cm.n(); ++i) {
    chance += g.rows[i] * g.cols[i];
    rows2 += g.rows[i] * g.rows[i];
    cols2 += g.cols[i] * g.cols[i];
  }
  const double den = (g.m * g.m - rows2) * (g.m * g.m - cols2);
  if (!(den > 0.0)) return std::nullopt;
  return (g.m * g.diag - chance) / std::sqrt(den);
}

double joint_entropy(const ConfusionMatrix& cm) {
  const double m = cm.total();
  double h = 0.0;
  for (double v : cm.matrix().data()) h += xlogx(v / m, std::exp(1.0));
  return h;
}

double mutual_information(const ConfusionMatrix& cm) {
  const auto g = marginals(cm);
  double mi = 0.0;
  for (std::size_t i = 0; i < cm.n(); ++i)
    for (std::size_t j = 0; j < cm.n(); ++j) {
      const double pij = cm(i, j) / g.m;
      if (pij > 0.0) mi += pij * std::log(pij / ((g.rows[i] / g.m) * (g.cols[j] / g.m)));
    }
  return std::max(mi, 0.0);
}

MeasureValue nmi(const ConfusionMatrix& cm) {
  const double h = joint_entropy(cm);
  if (h > 0.0) return std::clamp(mutual_information(cm) / h, 0.0, 1.0);
  for (std::size_t i = 0; i < cm.n(); ++i)
    if (cm(i, i) > 0.0) return 1.0;
  return std::nullopt;
}

double cen(const ConfusionMatrix& cm) {
  const std::size_t n = cm.n();
  const auto g = marginals(cm);
  const double base = 2.0 * static_cast<double>(n - 1);
  double total = 0.0;
  for (std::size_t j = 0; j < n; ++j) {
    const double den = g.rows[j] + g.cols[j];
    if (den == 0.0) continue;
    double cen_j = 0.0;
    for (std::size_t k = 0; k < n; ++k) {
      if (k == j) continue;
      cen_j += xlogx(cm(j, k) / den, base) + xlogx(cm(k, j) / den, base);
    }
    total += den / (2.0 * g.m) * cen_j;
  }
  return total;
}

double mcen(const ConfusionMatrix& cm) {
  const std::size_t n = cm.n();
  if (n < 3) throw UnsupportedMeasure("mcen is only available for three or more classes");
  const auto g = marginals(cm);
  const double base = 2.0 * static_cast<double>(n - 1);
  // Each class counts its diagonal cell once rather than twice.
  const double weight_total = 2.0 * g.m - g.diag;
  if (!(weight_total > 0.0)) return 0.0;
  double total = 0.0;
  for (std::size_t j = 0; j < n; ++j) {
    const double den = g.rows[j] + g.cols[j] - cm(j, j);
    if (den == 0.0) continue;
    double h = 0.0;
    for (std::size_t k = 0; k < n; ++k) {
      if (k == j) continue;
      h += xlogx(cm(j, k) / den, base) + xlogx(cm(k, j) / den, base);
    }
    total += den / weight_total * h;
  }
  return total;
}

MeasureReport evaluate(const ConfusionMatrix& input, bool use_estimate, const MeasureSelection& selection,
                       std::string matrix_id) {
  const ConfusionMatrix cm = use_estimate ? estimate(input) : input;
  MeasureReport report;
  report.matrix_id = std::move(matrix_id);
  report.source = use_estimate ? Source::estimate : Source::raw;
  auto& out = report.values;

  if (cm.n() == 2) {
    const auto b = binary_measures(cm);
    const std::pair<std::string_view, MeasureValue> binary[] = {
        {"sen", b.sen}, {"spe", b.spe}, {"pre", b.pre}, {"ipre", b.ipre},
        {"f1s", b.f1s}, {"fmi", b.fmi}, {"auc", b.auc}, {"gini", b.gini}};
    for (const auto& [name, v] : binary)
      if (selection.includes(name)) out.set(name, v);
  }

  if (selection.includes("acc")) out.set("acc", accuracy(cm));
  if (selection.includes("kappa")) out.set("kappa", cohen_kappa(cm));
  if (selection.includes("mcc") || selection.includes("mcc_s")) {
    const auto v = mcc(cm);
    if (selection.includes("mcc")) out.set("mcc", v);
    if (selection.includes("mcc_s")) out.set("mcc_s", v ? MeasureValue((*v + 1.0) / 2.0) : std::nullopt);
  }
  if (selection.includes("nmi")) out.set("nmi", nmi(cm));
  if (selection.includes("h_joint")) out.set("h_joint", joint_entropy(cm));
  if (selection.includes("mi")) out.set("mi", mutual_information(cm));
  if (selection.includes("cen") || selection.includes("cen_s")) {
    const double v = cen(cm);
    if (selection.includes("cen")) out.set("cen", v);
    if (selection.includes("cen_s")) out.set("cen_s", 1.0 - v);
  }
  if (selection.includes("mcen") || selection.includes("mcen_s")) {
    if (cm.n() >= 3) {
      const double v = mcen(cm);
      if (selection.includes("mcen")) out.set("mcen", v);
      if (selection.includes("mcen_s")) out.set("mcen_s", 1.0 - v);
    } else {
      for (const char* name : {"mcen", "mcen_s"})
        if (selection.includes(name)) report.unsupported.emplace_back(name);
    }
  }
  if (selection.includes("eve")) {
    if (cm.has_empty_column()) {
      out.set("eve", std::nullopt);
    } else {
      out.set("eve", eve_score(cm));
    }
  }
  return report;
}

}  // namespace eve
