#include "eve/cli/run.hpp"

#include <numeric>
#include <stdexcept>

#include <fmt/format.h>

#include "eve/cli/matrix_io.hpp"
#include "eve/cli/paper_tables.hpp"
#include "eve/cli/report.hpp"
#include "eve/convert.hpp"
#include "eve/densemat.hpp"
#include "eve/errors.hpp"
#include "eve/measures.hpp"

namespace eve::cli {

namespace {

std::optional<SpectrumSummary> spectrum_for(const ConfusionMatrix& m, bool use_estimate) {
  if (m.has_empty_column()) return std::nullopt;
  return summarize_spectrum(use_estimate ? estimate(m) : m);
}

Evaluation evaluate_plain(const ConfusionMatrix& m, bool use_estimate, const MeasureSelection& sel) {
  Evaluation e;
  e.matrix = summarize_matrix(m);
  e.spectrum = spectrum_for(m, use_estimate);
  e.measures = evaluate(m, use_estimate, sel);
  return e;
}

Evaluation evaluate_pairs(const ConfusionMatrix& m, const RunConfig& cfg, const MeasureSelection& sel) {
  // Counting pairs needs whole observations, whatever is done afterwards.
  BinaryCounts counts = pairs_binary(m);
  if (cfg.uncorrected_pairs) {
    counts = pairs_binary_uncorrected(m);
  } else if (cfg.use_estimate) {
    counts = pairs_binary(estimate(m), PairPolicy::allow_fractional);
  }
  const ConfusionMatrix binary = counts.to_confusion();
  Evaluation e = evaluate_plain(binary, false, sel);
  e.matrix = summarize_matrix(m);
  if (cfg.use_estimate) e.measures.source = Source::estimate;
  e.pairs = counts;
  e.pair_formula = cfg.uncorrected_pairs ? "uncorrected" : "corrected";
  return e;
}

Evaluation evaluate_ovr(const ConfusionMatrix& m, const RunConfig& cfg, const MeasureSelection& sel) {
  Evaluation e = evaluate_plain(m, cfg.use_estimate, sel);
  for (std::size_t j = 0; j < m.n(); ++j) e.per_class.push_back(evaluate_plain(one_vs_rest(m, j), cfg.use_estimate, sel));
  return e;
}

template <typename Fn>
RunResult guarded(Fn&& fn) {
  RunResult r;
  try {
    r.out = fn();
  } catch (const ParseError& ex) {
    r.exit_code = kExitParse;
    r.err = fmt::format("parse error: {}\n", ex.what());
  } catch (const ValidationError& ex) {
    r.exit_code = kExitValidation;
    r.err = fmt::format("invalid input: {}\n", ex.what());
  } catch (const UnsupportedMeasure& ex) {
    r.exit_code = kExitValidation;
    r.err = fmt::format("unsupported: {}\n", ex.what());
  } catch (const ContractViolation& ex) {
    r.exit_code = kExitValidation;
    r.err = fmt::format("invalid input: {}\n", ex.what());
  } catch (const std::out_of_range& ex) {
    r.exit_code = kExitValidation;
    r.err = fmt::format("invalid argument: {}\n", ex.what());
  } catch (const std::exception& ex) {
    r.exit_code = kExitInternal;
    r.err = fmt::format("error: {}\n", ex.what());
  }
  return r;
}

}  // namespace

ConfusionMatrix load_input(const RunConfig& cfg) {
  const std::string text = read_file(cfg.input_path);
  ConfusionMatrix m = [&] {
    switch (cfg.input_format) {
      case InputFormat::labels_tsv: return parse_labels(text, false);
      case InputFormat::soft_tsv: return parse_labels(text, true);
      case InputFormat::matrix_csv: break;
    }
    return parse_matrix_csv(text);
  }();
  if (cfg.transpose) m = m.transposed();
  if (cfg.smooth) m = eve::smooth(m);
  return m;
}

RunResult run_evaluate(const RunConfig& cfg) {
  return guarded([&] {
    const MeasureSelection sel = MeasureSelection::parse(cfg.measures);
    const ConfusionMatrix m = load_input(cfg);
    Evaluation e;
    switch (cfg.convert) {
      case Conversion::none: e = evaluate_plain(m, cfg.use_estimate, sel); break;
      case Conversion::pairs: e = evaluate_pairs(m, cfg, sel); break;
      case Conversion::ovr: e = evaluate_ovr(m, cfg, sel); break;
    }
    const ToleranceEcho echo{cfg.echo_tolerances};
    return cfg.output_format == OutputFormat::json ? render_json(e, echo) : render_text(e, echo);
  });
}

RunResult run_bounds(const RunConfig& cfg) {
  return guarded([&] {
    const ConfusionMatrix m = load_input(cfg);
    Evaluation e;
    e.matrix = summarize_matrix(m);
    e.spectrum = summarize_spectrum(m);
    if (!e.spectrum) throw ValidationError("a class is empty; bounds need every class present (try --smooth)");
    const ToleranceEcho echo{cfg.echo_tolerances};
    return cfg.output_format == OutputFormat::json ? render_json(e, echo) : render_text(e, echo);
  });
}

RunResult run_paper_tables(std::span<const int> tables) {
  return guarded([&] {
    std::vector<int> ids(tables.begin(), tables.end());
    if (ids.empty()) {
      ids.resize(kTableCount);
      std::iota(ids.begin(), ids.end(), 1);
    }
    return render_tables(reproduce_tables(ids));
  });
}

}  // namespace eve::cli
