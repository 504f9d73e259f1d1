#pragma once

#include <span>
#include <string>
#include <vector>

#include "eve/confusion.hpp"

namespace eve::cli {

enum class InputFormat { matrix_csv, labels_tsv, soft_tsv };
enum class Conversion { none, pairs, ovr };
enum class OutputFormat { table, json };

struct RunConfig {
  std::string input_path;
  InputFormat input_format = InputFormat::matrix_csv;
  bool transpose = false;     // input has true classes on rows
  bool smooth = false;        // add J/n before anything else
  bool use_estimate = false;  // compute measures on the class-size estimate
  Conversion convert = Conversion::none;
  bool uncorrected_pairs = false;  // pairs with the uncorrected identities, for comparison only
  std::vector<std::string> measures = {"all"};
  OutputFormat output_format = OutputFormat::table;
  bool echo_tolerances = false;
};

inline constexpr int kExitOk = 0;
inline constexpr int kExitInternal = 1;
inline constexpr int kExitValidation = 2;
inline constexpr int kExitParse = 3;

struct RunResult {
  int exit_code = kExitOk;
  std::string out;
  std::string err;
};

/// Reads and parses the input named by `cfg`, then applies --transpose and
/// --smooth.
ConfusionMatrix load_input(const RunConfig& cfg);

RunResult run_evaluate(const RunConfig& cfg);
/// Spectrum and bounds only. Only the input, transpose, smooth and output
/// settings of `cfg` are used.
RunResult run_bounds(const RunConfig& cfg);
/// Empty `tables` selects all of them.
RunResult run_paper_tables(std::span<const int> tables);

}  // namespace eve::cli
