#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "eve/measures.hpp"

namespace eve::cli {

enum class CellStatus { match, mismatch, skipped };

/// One published number next to its recomputed value.
struct TableCell {
  std::string row;
  std::string column;
  std::string printed;      // as published: "0.893", "-0.8", "NA", "60.8%"
  MeasureValue computed;    // std::nullopt is NA
  double tolerance = 0.0;
  bool unsupported = false; // measure not computable for this input
  bool optional = false;    // mismatches reported but not counted

  CellStatus status() const;
  /// |computed - printed|; absent when either side is NA.
  std::optional<double> delta() const;
};

struct TableSection {
  std::string title;
  std::vector<TableCell> cells;
  /// Set for sections that demonstrate a known-wrong variant. Their
  /// mismatches are the expected outcome and are not counted.
  bool expect_mismatch = false;
};

struct TableReport {
  int id = 0;
  std::string title;
  std::vector<TableSection> sections;
  std::vector<std::string> notes;

  /// Cells with the given status over the counted sections. Optional cells
  /// are excluded from the mismatch count.
  std::size_t count(CellStatus s) const;
  /// First cell with this row and column in any section, or nullptr.
  const TableCell* find(std::string_view row, std::string_view column) const;
};

/// Tolerance implied by how a value was printed: 0.01 for up to two
/// decimals, 0.001 for three, 0.0005 for four or more. Percentages get 0.5
/// (points).
double printed_tolerance(std::string_view printed);

/// "NA" gives std::nullopt; a trailing '%' is dropped. Throws
/// std::invalid_argument on anything else that is not a number.
std::optional<double> parse_printed(std::string_view printed);

inline constexpr int kTableCount = 9;

/// Recomputes table `id` (1..9) from the bundled fixtures. Throws
/// std::out_of_range for other ids.
TableReport reproduce_table(int id);
std::vector<TableReport> reproduce_tables(std::span<const int> ids);

std::string render_tables(const std::vector<TableReport>& tables);

}  // namespace eve::cli
