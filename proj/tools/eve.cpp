#include <iostream>
#include <map>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "eve/cli/paper_tables.hpp"
#include "eve/cli/run.hpp"

namespace {

int emit(const eve::cli::RunResult& r) {
  std::cout << r.out;
  std::cerr << r.err;
  return r.exit_code;
}

}  // namespace

int main(int argc, char** argv) {
  using namespace eve::cli;

  CLI::App app{"Confusion-matrix evaluation with eigenvalue-based measures"};
  app.require_subcommand(1);

  RunConfig cfg;
  const std::map<std::string, InputFormat> formats = {
      {"matrix", InputFormat::matrix_csv}, {"labels", InputFormat::labels_tsv}, {"soft", InputFormat::soft_tsv}};
  const std::map<std::string, Conversion> conversions = {
      {"none", Conversion::none}, {"pairs", Conversion::pairs}, {"ovr", Conversion::ovr}};
  const std::map<std::string, OutputFormat> outputs = {{"table", OutputFormat::table}, {"json", OutputFormat::json}};

  auto add_input_options = [&](CLI::App* sub) {
    sub->add_option("file", cfg.input_path, "Matrix CSV or label TSV")->required();
    sub->add_option("--format", cfg.input_format, "Input format: matrix, labels or soft")
        ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));
    sub->add_flag("--transpose", cfg.transpose, "Input has true classes on rows");
    sub->add_flag("--smooth", cfg.smooth, "Add J/n to every cell first");
    sub->add_option("--out", cfg.output_format, "Output: table or json")
        ->transform(CLI::CheckedTransformer(outputs, CLI::ignore_case));
    sub->add_flag("--echo-tolerances", cfg.echo_tolerances, "Print the numerical tolerances in use");
  };

  auto* evaluate = app.add_subcommand("evaluate", "Compute measures for one confusion matrix");
  add_input_options(evaluate);
  evaluate->add_flag("--use-estimate", cfg.use_estimate, "Use the class-size adjusted estimate");
  evaluate->add_option("--convert", cfg.convert, "Multi-class conversion: none, pairs or ovr")
      ->transform(CLI::CheckedTransformer(conversions, CLI::ignore_case));
  evaluate->add_flag("--uncorrected-pairs", cfg.uncorrected_pairs,
                     "With --convert pairs, use the uncorrected counting identities (comparison only)");
  evaluate->add_option("--measures", cfg.measures, "Comma-separated measure names, or all/binary/multiclass")
      ->delimiter(',');

  auto* bounds = app.add_subcommand("bounds", "Spectrum and Gershgorin bounds only");
  add_input_options(bounds);

  std::vector<int> tables;
  auto* paper = app.add_subcommand("paper-tables", "Recompute the bundled reference tables");
  paper->add_option("--tables", tables, "Comma-separated table ids (default all)")
      ->delimiter(',')
      ->check(CLI::Range(1, kTableCount));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitValidation;
  }

  if (evaluate->parsed()) return emit(run_evaluate(cfg));
  if (bounds->parsed()) return emit(run_bounds(cfg));
  return emit(run_paper_tables(tables));
}
