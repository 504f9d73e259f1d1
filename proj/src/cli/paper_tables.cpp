#include "eve/cli/paper_tables.hpp"

#include <array>
#include <charconv>
#include <cmath>
#include <functional>
#include <stdexcept>

#include <fmt/format.h>

#include "eve/cli/fixtures.hpp"
#include "eve/confusion.hpp"
#include "eve/convert.hpp"
#include "eve/spectral.hpp"

namespace eve::cli {

namespace {

using Printed = std::vector<std::string_view>;

constexpr double kSpectrumTolerance = 0.002;  // MNIST spectra are printed rounded
constexpr double kPercentTolerance = 0.5;

TableCell make_cell(std::string_view row, std::string_view column, std::string_view printed, MeasureValue computed) {
  TableCell c;
  c.row = row;
  c.column = column;
  c.printed = printed;
  c.computed = computed;
  c.tolerance = printed_tolerance(printed);
  return c;
}

// Adds one cell per column; "-" in `printed` marks a blank published cell.
void add_row(TableSection& s, std::string_view row, const std::vector<std::string>& columns, const Printed& printed,
             const std::function<MeasureValue(std::size_t)>& compute) {
  if (printed.size() != columns.size()) throw std::logic_error("row '" + std::string(row) + "' has wrong width");
  std::size_t k = 0;
  for (std::string_view p : printed) {
    if (p != "-") s.cells.push_back(make_cell(row, columns[k], p, compute(k)));
    ++k;
  }
}

void add_measure_row(TableSection& s, std::string_view key, const std::vector<std::string>& columns,
                     const std::vector<MeasureReport>& reports, Printed printed) {
  const std::size_t first = s.cells.size();
  add_row(s, key, columns, printed, [&](std::size_t k) -> MeasureValue {
    return reports[k].values.contains(key) ? reports[k].values.at(key) : std::nullopt;
  });
  for (std::size_t i = first; i < s.cells.size(); ++i) {
    auto& c = s.cells[i];
    for (std::size_t k = 0; k < columns.size(); ++k) {
      if (columns[k] == c.column && !reports[k].values.contains(key)) c.unsupported = true;
    }
    if (key == "mcen" || key == "mcen_s") c.optional = true;
  }
}

MeasureReport report_of(const ConfusionMatrix& m, bool use_estimate = false) {
  return evaluate(m, use_estimate, MeasureSelection::all());
}

MeasureValue nth(const std::vector<double>& v, std::size_t i) {
  return i < v.size() ? MeasureValue(v[i]) : std::nullopt;
}

double percent_drop(double before, double after) { return 100.0 * (1.0 - after / before); }

TableCell percent_cell(std::string_view row, std::string_view column, std::string_view printed, double computed) {
  TableCell c = make_cell(row, column, printed, computed);
  c.tolerance = kPercentTolerance;
  return c;
}

TableReport table1() {
  TableReport t{1, "Bounds and eigenvalues of A and B, binary examples", {}, {}};
  TableSection s{"spectra", {}, false};
  const std::vector<std::string> cols = {"thr_min", "thr_max", "mu1", "mu2", "lambda1", "lambda2"};
  auto row = [&](std::string_view id, Printed printed) {
    const Spectrum sp = spectrum(fixture(id));
    const double values[] = {sp.thr_min, sp.thr_max, sp.mus[0], sp.mus[1], sp.lambdas[0], sp.lambdas[1]};
    add_row(s, id, cols, printed, [&](std::size_t k) { return MeasureValue(values[k]); });
  };
  row("Ma", {"0.000", "2.000", "2.000", "0.000", "1.000", "0.000"});
  row("Mb", {"0.888", "1.111", "1.111", "0.888", "1.000", "0.800"});
  row("Mc", {"-8.00", "10.00", "10.00", "-8.00", "1.000", "-0.80"});
  row("M1", {"0.827", "1.173", "1.173", "0.827", "1.005", "0.699"});
  row("M2", {"0.767", "1.233", "1.233", "0.767", "1.019", "0.604"});
  row("M3", {"0.973", "1.026", "1.026", "0.973", "1.000", "0.948"});
  t.sections.push_back(std::move(s));

  TableSection ir{"imbalance ratio", {}, false};
  ir.cells.push_back(make_cell("ir", "M2", "0.034", imbalance_ratio(fixture("M2"))));
  ir.cells.push_back(make_cell("ir", "M3", "0.538", imbalance_ratio(fixture("M3"))));
  t.sections.push_back(std::move(ir));
  return t;
}

TableReport table2() {
  TableReport t{2, "Measures for the binary examples", {}, {}};
  const std::vector<std::string> cols = {"Ma", "Mb", "Mc", "M1", "M2", "M3", "~M2", "~M3"};
  std::vector<MeasureReport> reports;
  for (std::string_view id : {"Ma", "Mb", "Mc", "M1", "M2", "M3"}) reports.push_back(report_of(fixture(id)));
  reports.push_back(report_of(fixture("M2"), true));
  reports.push_back(report_of(fixture("M3"), true));

  TableSection s{"measures", {}, false};
  add_measure_row(s, "sen", cols, reports, {"0.500", "0.90", "0.10", "0.893", "0.900", "0.977", "0.626", "0.983"});
  add_measure_row(s, "spe", cols, reports, {"0.500", "0.90", "0.10", "0.812", "0.724", "0.971", "0.933", "0.960"});
  add_measure_row(s, "pre", cols, reports, {"0.375", "0.90", "0.10", "0.806", "0.101", "0.984", "0.377", "0.978"});
  add_measure_row(s, "acc", cols, reports, {"0.500", "0.90", "0.10", "0.850", "0.730", "0.975", "0.915", "0.975"});
  add_measure_row(s, "f1s", cols, reports, {"0.428", "0.90", "0.10", "0.847", "0.182", "0.980", "0.470", "0.981"});
  add_measure_row(s, "fmi", cols, reports, {"0.433", "0.90", "0.10", "0.848", "0.302", "0.981", "0.486", "0.981"});
  add_measure_row(s, "auc", cols, reports, {"0.500", "0.90", "0.10", "0.853", "0.812", "0.974", "0.779", "0.972"});
  add_measure_row(s, "kappa", cols, reports, {"0.000", "0.800", "-0.8", "0.701", "0.129", "0.945", "0.423", "0.946"});
  add_measure_row(s, "mcc_s", cols, reports, {"0.500", "0.90", "0.10", "0.852", "0.623", "0.973", "0.722", "0.973"});
  add_measure_row(s, "nmi", cols, reports, {"0.000", "0.361", "0.361", "0.249", "0.038", "0.699", "0.113", "0.700"});
  add_measure_row(s, "cen_s", cols, reports, {"0.028", "0.57", "-0.04", "0.452", "0.580", "0.844", "0.702", "0.845"});
  add_measure_row(s, "mcen_s", cols, reports, {"0.123", "0.55", "0.00", "0.455", "0.638", "0.826", "0.687", "0.827"});
  add_measure_row(s, "eve", cols, reports, {"0.000", "0.99", "0.00", "0.976", "0.952", "0.999", "0.912", "0.999"});
  t.sections.push_back(std::move(s));
  t.notes.push_back("mcen_s is not computed for two classes; those cells are skipped.");
  return t;
}

TableReport table3() {
  TableReport t{3, "Bounds and eigenvalues of A and B, multi-class examples", {}, {}};
  const std::vector<std::string> cols = {"M4", "M5", "M6", "M7+J/5"};
  const ConfusionMatrix m7 = fixture("M7");
  const std::vector<Spectrum> spectra = {spectrum(fixture("M4")), spectrum(fixture("M5")), spectrum(fixture("M6")),
                                         spectrum(smooth(m7))};
  TableSection s{"spectra", {}, false};
  add_row(s, "thr_min", cols, {"0.716", "0.279", "0.144", "-3.361"},
          [&](std::size_t k) { return MeasureValue(spectra[k].thr_min); });
  add_row(s, "thr_max", cols, {"1.283", "1.721", "1.855", "5.361"},
          [&](std::size_t k) { return MeasureValue(spectra[k].thr_max); });
  const Printed mus[] = {{"1.283", "1.712", "1.765", "3.871"},
                         {"1.000", "0.654", "1.322", "1.179"},
                         {"0.716", "0.633", "1.000", "0.999"},
                         {"-", "-", "0.541", "0.597"},
                         {"-", "-", "0.371", "-1.65"}};
  const Printed lambdas[] = {{"1.014", "1.018", "1.149", "1.150"},
                             {"1.000", "0.411", "1.033", "0.994"},
                             {"0.545", "0.330", "1.000", "0.987"},
                             {"-", "-", "0.185", "0.181"},
                             {"-", "-", "0.171", "-0.104"}};
  for (std::size_t i = 0; i < 5; ++i) {
    add_row(s, fmt::format("mu{}", i + 1), cols, mus[i], [&](std::size_t k) { return nth(spectra[k].mus, i); });
  }
  for (std::size_t i = 0; i < 5; ++i) {
    add_row(s, fmt::format("lambda{}", i + 1), cols, lambdas[i],
            [&](std::size_t k) { return nth(spectra[k].lambdas, i); });
  }
  t.sections.push_back(std::move(s));

  TableSection e{"eve with and without smoothing", {}, false};
  e.cells.push_back(make_cell("eve", "M7", "0.77604", eve_score(m7)));
  e.cells.push_back(make_cell("eve", "M7+J/5", "0.77539", spectra[3].eve));
  t.sections.push_back(std::move(e));
  t.notes.push_back("M7 has a zero diagonal cell, so A needs the smoothed matrix M7 + J/5.");
  return t;
}

TableReport table4() {
  TableReport t{4, "Measures for the multi-class examples", {}, {}};
  const std::vector<std::string> cols = {"M4", "M5", "M6", "M7", "~M5", "~M6", "~M7"};
  std::vector<MeasureReport> reports;
  for (std::string_view id : {"M4", "M5", "M6", "M7"}) reports.push_back(report_of(fixture(id)));
  for (std::string_view id : {"M5", "M6", "M7"}) reports.push_back(report_of(fixture(id), true));

  TableSection s{"measures", {}, false};
  add_measure_row(s, "acc", cols, reports, {"0.853", "0.577", "0.865", "0.858", "0.584", "0.818", "0.798"});
  add_measure_row(s, "kappa", cols, reports, {"0.780", "0.371", "0.816", "0.806", "0.379", "0.756", "0.730"});
  add_measure_row(s, "mcc_s", cols, reports, {"0.892", "0.689", "0.912", "0.908", "0.691", "0.887", "0.875"});
  add_measure_row(s, "nmi", cols, reports, {"0.523", "0.079", "0.629", "0.618", "0.081", "0.592", "0.552"});
  add_measure_row(s, "cen_s", cols, reports, {"0.774", "0.354", "0.861", "0.852", "0.352", "0.847", "0.822"});
  add_measure_row(s, "mcen_s", cols, reports, {"0.697", "0.237", "0.799", "0.784", "0.231", "0.794", "0.726"});
  add_measure_row(s, "eve", cols, reports, {"0.968", "0.883", "0.859", "0.776", "0.889", "0.756", "0.761"});
  t.sections.push_back(std::move(s));

  TableSection d{"eve drop", {}, false};
  d.cells.push_back(
      percent_cell("eve drop", "M6->M7", "9.7%", percent_drop(*reports[2].values.at("eve"), *reports[3].values.at("eve"))));
  t.sections.push_back(std::move(d));
  return t;
}

std::vector<MeasureReport> pair_reports(bool corrected) {
  std::vector<MeasureReport> reports;
  for (std::string_view id : {"M4", "M5", "M6", "M7"}) {
    const ConfusionMatrix m = fixture(id);
    const BinaryCounts counts = corrected ? pairs_binary(m) : pairs_binary_uncorrected(m);
    reports.push_back(report_of(counts.to_confusion()));
  }
  if (!corrected) return reports;
  const ConfusionMatrix estimates[] = {estimate(fixture("M5")), estimate(fixture("M6")),
                                       estimate(smooth(fixture("M7")))};
  for (const auto& m : estimates) reports.push_back(report_of(pairs_binary(m, PairPolicy::allow_fractional).to_confusion()));
  return reports;
}

void add_table5_rows(TableSection& s, const std::vector<std::string>& cols, const std::vector<MeasureReport>& r,
                     bool all_columns) {
  // The uncorrected section only covers the integer matrices M4..M7.
  auto row = [&](std::string_view key, std::array<std::string_view, 7> printed) {
    if (all_columns) {
      add_measure_row(s, key, cols, r, {printed[0], printed[1], printed[2], printed[3], printed[4], printed[5],
                                        printed[6]});
    } else {
      add_measure_row(s, key, cols, r, {printed[0], printed[1], printed[2], printed[3]});
    }
  };
  row("sen", {"0.775", "0.433", "0.912", "0.912", "0.435", "0.910", "0.893"});
  row("spe", {"0.881", "0.707", "0.918", "0.912", "0.713", "0.878", "0.862"});
  row("pre", {"0.762", "0.426", "0.789", "0.778", "0.431", "0.694", "0.654"});
  row("acc", {"0.846", "0.616", "0.916", "0.912", "0.621", "0.886", "0.869"});
  row("f1s", {"0.768", "0.429", "0.846", "0.840", "0.433", "0.787", "0.755"});
  row("fmi", {"0.768", "0.429", "0.848", "0.842", "0.433", "0.795", "0.765"});
  row("auc", {"0.828", "0.570", "0.915", "0.912", "0.574", "0.894", "0.878"});
  row("kappa", {"0.653", "0.140", "0.789", "0.779", "0.149", "0.712", "0.669"});
  row("mcc_s", {"0.827", "0.570", "0.896", "0.892", "0.574", "0.862", "0.842"});
  row("nmi", {"0.207", "0.008", "0.371", "0.359", "0.009", "0.291", "0.251"});
  row("cen_s", {"0.445", "0.117", "0.645", "0.635", "0.122", "0.584", "0.549"});
  row("mcen_s", {"0.697", "0.237", "0.799", "0.784", "0.183", "0.584", "0.554"});
  row("eve", {"0.966", "0.483", "0.994", "0.993", "0.501", "0.989", "0.986"});
}

TableReport table5() {
  TableReport t{5, "Multi-class matrices converted to one binary problem by pair counting", {}, {}};
  const std::vector<std::string> cols = {"M4", "M5", "M6", "M7", "~M5", "~M6", "~M7"};
  TableSection s{"corrected pair counts", {}, false};
  add_table5_rows(s, cols, pair_reports(true), true);
  t.sections.push_back(std::move(s));

  TableSection literal{"uncorrected identities b = P/2 - a, c = Q/2 - a (expected to disagree)", {}, true};
  add_table5_rows(literal, {"M4", "M5", "M6", "M7"}, pair_reports(false), false);
  t.sections.push_back(std::move(literal));

  t.notes.push_back(
      "Erratum: the commonly printed identities b = P/2 - a, c = Q/2 - a, d = M - (P+Q)/2 + a count each "
      "observation paired with itself. The corrected identities b = (P-m)/2 - a, c = (Q-m)/2 - a, "
      "d = m(m-1)/2 - a - b - c agree with direct pair enumeration and reproduce the published values; "
      "the uncorrected section shows the old identities failing (M4 sen 0.760 instead of 0.775).");
  t.notes.push_back("The ~M7 column is computed from the smoothed M7 + J/5.");
  return t;
}

using ClassRows = std::array<Printed, 11>;

// One per-class block: raw one-vs-rest for every class, then its estimate.
TableSection per_class_section(std::string_view id, const ClassRows& rows) {
  const ConfusionMatrix m = fixture(id);
  std::vector<std::string> cols;
  std::vector<MeasureReport> reports;
  for (int modified = 0; modified < 2; ++modified) {
    for (std::size_t j = 0; j < m.n(); ++j) {
      cols.push_back(fmt::format("{} j={}", modified ? "mod" : "raw", j + 1));
      reports.push_back(report_of(one_vs_rest(m, j), modified == 1));
    }
  }
  TableSection s{std::string(id), {}, false};
  const std::string_view keys[] = {"pre", "f1s", "fmi", "auc", "acc", "kappa", "mcc_s", "nmi", "cen_s", "mcen_s", "eve"};
  for (std::size_t r = 0; r < rows.size(); ++r) {
    const std::size_t first = s.cells.size();
    add_measure_row(s, keys[r], cols, reports, rows[r]);
    for (std::size_t i = first; i < s.cells.size(); ++i) s.cells[i].row = fmt::format("{} {}", id, keys[r]);
  }
  return s;
}

TableReport table6() {
  TableReport t{6, "Each class against the others: M4 and M5", {}, {}};
  t.sections.push_back(per_class_section(
      "M4", {Printed{"1.0", "0.833", "0.741", "1.0", "0.876", "0.802"},
             Printed{"1.0", "0.781", "0.796", "1.0", "0.728", "0.807"},
             Printed{"1.0", "0.764", "0.798", "1.0", "0.738", "0.807"},
             Printed{"1.0", "0.815", "0.855", "1.0", "0.786", "0.851"},
             Printed{"1.0", "0.853", "0.853", "1.0", "0.830", "0.862"},
             Printed{"1.0", "0.656", "0.682", "1.0", "0.609", "0.699"},
             Printed{"1.0", "0.831", "0.844", "1.0", "0.814", "0.850"},
             Printed{"1.0", "0.218", "0.238", "1.0", "0.198", "0.246"},
             Printed{"1.0", "0.479", "0.470", "1.0", "0.465", "0.742"},
             Printed{"1.0", "0.481", "0.473", "1.0", "0.484", "0.472"},
             Printed{"1.0", "0.948", "0.979", "1.0", "0.913", "0.976"}}));
  t.sections.push_back(per_class_section(
      "M5", {Printed{"0.505", "0.600", "0.657", "0.616", "0.676", "0.713"},
             Printed{"0.592", "0.564", "0.575", "0.616", "0.539", "0.549"},
             Printed{"0.602", "0.565", "0.579", "0.616", "0.551", "0.564"},
             Printed{"0.716", "0.674", "0.677", "0.707", "0.665", "0.660"},
             Printed{"0.715", "0.719", "0.720", "0.735", "0.700", "0.698"},
             Printed{"0.384", "0.358", "0.371", "0.414", "0.330", "0.339"},
             Printed{"0.699", "0.680", "0.689", "0.707", "0.673", "0.680"},
             Printed{"0.066", "0.053", "0.059", "0.071", "0.050", "0.055"},
             Printed{"0.257", "0.237", "0.248", "0.247", "0.249", "0.261"},
             Printed{"0.307", "0.275", "0.291", "0.283", "0.302", "0.319"},
             Printed{"0.883", "0.789", "0.781", "0.860", "0.709", "0.713"}}));
  t.notes.push_back("\"mod\" columns use the class-size estimate of each one-vs-rest matrix.");
  return t;
}

TableReport table7() {
  TableReport t{7, "Each class against the others: M6", {}, {}};
  t.sections.push_back(per_class_section(
      "M6",
      {Printed{"0.895", "0.819", "0.847", "0.231", "1.0", "0.953", "0.878", "0.900", "0.679", "1.0"},
       Printed{"0.395", "0.894", "0.904", "0.272", "1.0", "0.218", "0.924", "0.924", "0.120", "1.0"},
       Printed{"0.476", "0.898", "0.906", "0.277", "1.0", "0.343", "0.926", "0.924", "0.212", "1.0"},
       Printed{"0.624", "0.949", "0.951", "0.655", "1.0", "0.560", "0.960", "0.953", "0.531", "1.0"},
       Printed{"0.886", "0.934", "0.943", "0.965", "1.0", "0.769", "0.953", "0.956", "0.909", "1.0"},
       Printed{"0.353", "0.847", "0.864", "0.255", "1.0", "0.169", "0.891", "0.893", "0.106", "1.0"},
       Printed{"0.720", "0.927", "0.933", "0.630", "1.0", "0.647", "0.947", "0.947", "0.596", "1.0"},
       Printed{"0.118", "0.494", "0.506", "0.056", "1.0", "0.057", "0.563", "0.552", "0.027", "1.0"},
       Printed{"0.705", "0.727", "0.737", "0.857", "1.0", "0.613", "0.772", "0.766", "0.775", "1.0"},
       Printed{"0.711", "0.719", "0.724", "0.839", "1.0", "0.661", "0.756", "0.747", "0.768", "1.0"},
       Printed{"0.393", "0.997", "0.998", "0.585", "1.0", "0.000", "0.998", "0.998", "0.000", "1.0"}}));
  return t;
}

TableReport table8() {
  TableReport t{8, "Each class against the others: M7", {}, {}};
  t.sections.push_back(per_class_section(
      "M7",
      {Printed{"0.895", "0.804", "0.847", "0.000", "1.0", "0.953", "0.867", "0.900", "0.242", "1.0"},
       Printed{"0.395", "0.885", "0.904", "NA", "1.0", "0.218", "0.918", "0.924", "0.015", "1.0"},
       Printed{"0.476", "0.889", "0.906", "0.000", "1.0", "0.343", "0.919", "0.924", "0.043", "1.0"},
       Printed{"0.624", "0.945", "0.951", "0.489", "1.0", "0.560", "0.957", "0.953", "0.502", "1.0"},
       Printed{"0.886", "0.928", "0.943", "0.958", "1.0", "0.769", "0.949", "0.956", "0.871", "1.0"},
       Printed{"0.353", "0.833", "0.864", "-0.02", "1.0", "0.169", "0.882", "0.893", "0.007", "1.0"},
       Printed{"0.720", "0.920", "0.933", "0.489", "1.0", "0.647", "0.942", "0.947", "0.511", "1.0"},
       Printed{"0.118", "0.472", "0.506", "0.002", "1.0", "0.057", "0.544", "0.552", "0.000", "1.0"},
       Printed{"0.705", "0.711", "0.737", "0.843", "1.0", "0.613", "0.758", "0.766", "0.728", "1.0"},
       Printed{"0.711", "0.706", "0.724", "0.820", "1.0", "0.661", "0.744", "0.747", "0.728", "1.0"},
       Printed{"0.393", "0.996", "0.998", "0.000", "1.0", "0.000", "0.998", "0.998", "0.000", "1.0"}}));
  t.notes.push_back("Class 4 has no correct prediction, so its raw f1s is NA (0/0).");
  return t;
}

TableReport table9() {
  TableReport t{9, "MNIST, hard (M8) and soft (M9) assignment", {}, {}};
  const ConfusionMatrix m8 = fixture("M8");
  const ConfusionMatrix m9 = fixture("M9");
  const Spectrum s8 = spectrum(m8);
  const Spectrum s9 = spectrum(m9);

  TableSection spectra{"spectra", {}, false};
  auto add_spectrum = [&](std::string_view id, const Spectrum& sp, std::string_view thr_min, std::string_view thr_max,
                          Printed mus, Printed lambdas) {
    spectra.cells.push_back(make_cell("thr_min", id, thr_min, sp.thr_min));
    spectra.cells.push_back(make_cell("thr_max", id, thr_max, sp.thr_max));
    std::size_t i = 0;
    for (std::string_view p : mus) {
      TableCell c = make_cell(fmt::format("mu{}", i + 1), id, p, sp.mus[i]);
      c.tolerance = kSpectrumTolerance;
      spectra.cells.push_back(std::move(c));
      ++i;
    }
    i = 0;
    for (std::string_view p : lambdas) {
      TableCell c = make_cell(fmt::format("lambda{}", i + 1), id, p, sp.lambdas[i]);
      c.tolerance = kSpectrumTolerance;
      spectra.cells.push_back(std::move(c));
      ++i;
    }
  };
  add_spectrum("M8", s8, "0.731", "1.269",
               {"1.198", "1.074", "1.025", "1.013", "0.999", "0.985", "0.966", "0.946", "0.899", "0.893"},
               {"1.019", "0.965", "0.933", "0.908", "0.893", "0.852", "0.785", "0.763", "0.738", "0.649"});
  add_spectrum("M9", s9, "-1.469", "3.469",
               {"3.119", "1.115", "0.967", "0.913", "0.884", "0.738", "0.672", "0.652", "0.488", "0.451"},
               {"1.001", "0.439", "0.359", "0.311", "0.273", "0.255", "0.213", "0.194", "0.150", "0.128"});
  t.sections.push_back(std::move(spectra));

  const std::vector<std::string> cols = {"M8", "M9"};
  const std::vector<MeasureReport> reports = {report_of(m8), report_of(m9)};
  TableSection measures{"measures", {}, false};
  const std::pair<std::string_view, Printed> rows[] = {
      {"acc", {"0.854", "0.335"}},   {"kappa", {"0.837", "0.261"}}, {"mcc_s", {"0.919", "0.630"}},
      {"nmi", {"0.555", "0.054"}},   {"cen_s", {"0.784", "0.251"}}, {"eve", {"0.996", "0.912"}}};
  const std::string_view drops[] = {"60.8%", "68.8%", "31.4%", "90.3%", "67.9%", "8.4%"};
  std::size_t k = 0;
  for (const auto& [key, printed] : rows) {
    add_measure_row(measures, key, cols, reports, printed);
    const auto before = reports[0].values.at(key);
    const auto after = reports[1].values.at(key);
    TableCell drop = percent_cell(key, "drop", drops[k++], 0.0);
    drop.computed = before && after ? MeasureValue(percent_drop(*before, *after)) : std::nullopt;
    measures.cells.push_back(std::move(drop));
  }
  t.sections.push_back(std::move(measures));

  TableSection ir{"imbalance ratio", {}, false};
  ir.cells.push_back(make_cell("ir", "M8", "0.786", imbalance_ratio(m8)));
  ir.cells.push_back(make_cell("ir", "M9", "0.786", imbalance_ratio(m9)));
  t.sections.push_back(std::move(ir));
  t.notes.push_back("Spectra are compared with tolerance 0.002; drops are 1 - M9/M8 in percent, tolerance 0.5 points.");
  return t;
}

std::string fmt_optional(const MeasureValue& v) { return v ? fmt::format("{:.5f}", *v) : "NA"; }

std::string_view status_label(const TableCell& c) {
  switch (c.status()) {
    case CellStatus::match:
      return "ok";
    case CellStatus::skipped:
      return "skipped";
    case CellStatus::mismatch:
      return c.optional ? "MISMATCH (optional)" : "MISMATCH";
  }
  return "";
}

}  // namespace

CellStatus TableCell::status() const {
  if (unsupported) return CellStatus::skipped;
  const auto expected = parse_printed(printed);
  if (!expected || !computed) return !expected && !computed ? CellStatus::match : CellStatus::mismatch;
  // A small slack absorbs binary rounding of the decimal tolerance itself.
  return std::abs(*computed - *expected) <= tolerance + 1e-12 ? CellStatus::match : CellStatus::mismatch;
}

std::optional<double> TableCell::delta() const {
  const auto expected = parse_printed(printed);
  if (!expected || !computed) return std::nullopt;
  return std::abs(*computed - *expected);
}

std::size_t TableReport::count(CellStatus s) const {
  std::size_t n = 0;
  for (const auto& section : sections) {
    if (section.expect_mismatch) continue;
    for (const auto& c : section.cells) {
      if (c.status() != s) continue;
      if (s == CellStatus::mismatch && c.optional) continue;
      ++n;
    }
  }
  return n;
}

const TableCell* TableReport::find(std::string_view row, std::string_view column) const {
  for (const auto& section : sections)
    for (const auto& c : section.cells)
      if (c.row == row && c.column == column) return &c;
  return nullptr;
}

double printed_tolerance(std::string_view printed) {
  if (!printed.empty() && printed.back() == '%') return kPercentTolerance;
  const auto dot = printed.find('.');
  const std::size_t decimals = dot == std::string_view::npos ? 0 : printed.size() - dot - 1;
  if (decimals <= 2) return 0.01;
  if (decimals == 3) return 0.001;
  return 0.0005;
}

std::optional<double> parse_printed(std::string_view printed) {
  if (printed == "NA") return std::nullopt;
  if (!printed.empty() && printed.back() == '%') printed.remove_suffix(1);
  double v = 0.0;
  const auto* end = printed.data() + printed.size();
  const auto [ptr, ec] = std::from_chars(printed.data(), end, v);
  if (ec != std::errc{} || ptr != end || printed.empty()) {
    throw std::invalid_argument("not a printed number: '" + std::string(printed) + "'");
  }
  return v;
}

TableReport reproduce_table(int id) {
  switch (id) {
    case 1: return table1();
    case 2: return table2();
    case 3: return table3();
    case 4: return table4();
    case 5: return table5();
    case 6: return table6();
    case 7: return table7();
    case 8: return table8();
    case 9: return table9();
    default: throw std::out_of_range(fmt::format("no table {}; valid ids are 1..{}", id, kTableCount));
  }
}

std::vector<TableReport> reproduce_tables(std::span<const int> ids) {
  std::vector<TableReport> out;
  out.reserve(ids.size());
  for (int id : ids) out.push_back(reproduce_table(id));
  return out;
}

std::string render_tables(const std::vector<TableReport>& tables) {
  std::string out;
  std::size_t total_mismatches = 0;
  for (const auto& t : tables) {
    out += fmt::format("== Table {}: {}\n", t.id, t.title);
    for (const auto& s : t.sections) {
      out += fmt::format("-- {}\n", s.title);
      out += fmt::format("{:<16} {:<10} {:>9} {:>10} {:>9}  {}\n", "row", "column", "printed", "computed", "|delta|",
                         "status");
      for (const auto& c : s.cells) {
        const auto d = c.delta();
        out += fmt::format("{:<16} {:<10} {:>9} {:>10} {:>9}  {}\n", c.row, c.column, c.printed, fmt_optional(c.computed),
                           d ? fmt::format("{:.5f}", *d) : "-", s.expect_mismatch && c.status() == CellStatus::mismatch
                                                                     ? std::string_view("differs (expected)")
                                                                     : status_label(c));
      }
    }
    for (const auto& note : t.notes) out += fmt::format("note: {}\n", note);
    const std::size_t bad = t.count(CellStatus::mismatch);
    total_mismatches += bad;
    out += fmt::format("summary: table {}: {} ok, {} mismatched, {} skipped\n\n", t.id, t.count(CellStatus::match), bad,
                       t.count(CellStatus::skipped));
  }
  out += fmt::format("total mismatched cells: {}\n", total_mismatches);
  return out;
}

}  // namespace eve::cli
