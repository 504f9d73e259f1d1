#pragma once

#include <string>
#include <string_view>

#include "eve/confusion.hpp"

namespace eve::cli {

/// Comma-separated numeric rows. Blank lines and lines starting with '#'
/// are skipped. Ragged rows and non-numeric fields raise ParseError with
/// the offending line (and field); a rectangular but non-square matrix
/// raises ValidationError.
ConfusionMatrix parse_matrix_csv(std::string_view text);

/// Tab-separated label file, one observation per line.
///   hard: "<true>\t<pred>"          (integer class indices from 0)
///   soft: "<true>\t<w_0>\t...\t<w_{n-1}>"  (nonnegative memberships)
ConfusionMatrix parse_labels(std::string_view text, bool soft);

/// Shortest round-trippable decimal text, one row per line.
std::string render_matrix_csv(const ConfusionMatrix& m);

/// Reads a whole file; throws ParseError(line 0) when it cannot be opened.
std::string read_file(const std::string& path);

}  // namespace eve::cli
