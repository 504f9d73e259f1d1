#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "eve/confusion.hpp"

namespace eve {

/// A measure value; std::nullopt is "NA" (a zero denominator).
using MeasureValue = std::optional<double>;

/// Stable measure identifiers, in report order.
inline constexpr std::string_view kMeasureNames[] = {
    "sen", "spe", "pre",   "ipre", "f1s", "fmi", "auc",  "gini", "acc",  "kappa",
    "mcc", "mcc_s", "nmi", "h_joint", "mi", "cen", "cen_s", "mcen", "mcen_s", "eve"};

/// Measures that only make sense for a 2x2 matrix.
bool is_binary_only(std::string_view name);
bool is_known_measure(std::string_view name);

/// Ordered name -> value list.
class MeasureValues {
 public:
  void set(std::string_view name, MeasureValue v);
  bool contains(std::string_view name) const;
  /// Throws std::out_of_range when the measure is absent.
  MeasureValue at(std::string_view name) const;
  const std::vector<std::pair<std::string, MeasureValue>>& items() const noexcept { return items_; }
  bool empty() const noexcept { return items_.empty(); }

 private:
  std::vector<std::pair<std::string, MeasureValue>> items_;
};

enum class Source { raw, estimate };
std::string_view to_string(Source s);

struct ClassMeasures {
  std::size_t class_index = 0;  // 0-based
  MeasureValues values;
};

struct MeasureReport {
  std::string matrix_id;
  Source source = Source::raw;
  MeasureValues values;
  /// Requested measures that cannot be computed for this input (for example
  /// MCEN on a binary matrix). They are omitted from `values`.
  std::vector<std::string> unsupported;
  std::optional<std::vector<ClassMeasures>> per_class;
};

/// Which measures a report should contain.
class MeasureSelection {
 public:
  static MeasureSelection all();
  static MeasureSelection binary();
  static MeasureSelection multiclass();
  /// Accepts measure names and the group names "all", "binary" and
  /// "multiclass". Throws ValidationError on an unknown name.
  static MeasureSelection parse(std::span<const std::string> names);

  bool includes(std::string_view name) const;
  const std::vector<std::string>& names() const noexcept { return names_; }

 private:
  std::vector<std::string> names_;
};

struct BinaryMeasures {
  MeasureValue sen;   // m11 / m.1
  MeasureValue spe;   // m22 / m.2
  MeasureValue pre;   // m11 / m1.
  MeasureValue ipre;  // m22 / m2.
  MeasureValue f1s;
  MeasureValue fmi;
  MeasureValue auc;   // (sen + spe) / 2
  MeasureValue gini;  // 2 auc - 1
};

/// Class 1 (first row/column) is the positive class.
BinaryMeasures binary_measures(const ConfusionMatrix& m);
/// binary_measures on estimate(m); equivalent to scaling the off-diagonal
/// cells by the square root of the class-size ratio.
BinaryMeasures adjusted_binary_measures(const ConfusionMatrix& m);

MeasureValue accuracy(const ConfusionMatrix& m);
MeasureValue cohen_kappa(const ConfusionMatrix& m);
MeasureValue mcc(const ConfusionMatrix& m);

/// Natural-log entropies of the joint (predicted, true) distribution.
double joint_entropy(const ConfusionMatrix& m);
double mutual_information(const ConfusionMatrix& m);
/// I / H. A single occupied cell gives H = 0: 1 when that cell is on the
/// diagonal, NA otherwise.
MeasureValue nmi(const ConfusionMatrix& m);

/// Confusion entropy. Can exceed 1 for two classes.
double cen(const ConfusionMatrix& m);

/// Modified confusion entropy for n >= 3 classes. Throws
/// UnsupportedMeasure for binary matrices.
double mcen(const ConfusionMatrix& m);

/// Computes every selected measure on `m`, or on estimate(m) when
/// `use_estimate` is set. Binary-only measures appear iff n = 2.
MeasureReport evaluate(const ConfusionMatrix& m, bool use_estimate, const MeasureSelection& selection,
                       std::string matrix_id = {});

}  // namespace eve
