#pragma once

#include <cstddef>

#include "eve/confusion.hpp"

namespace eve {

/// Pair counts over all m(m-1)/2 unordered observation pairs, classified by
/// whether the two observations share their predicted class and whether
/// they share their true class.
struct BinaryCounts {
  double a = 0.0;  // same predicted, same true
  double b = 0.0;  // same predicted, different true
  double c = 0.0;  // different predicted, same true
  double d = 0.0;  // different predicted, different true
  double m_pairs = 0.0;

  /// [[a, b], [c, d]] in the library orientation (columns are truth), so
  /// sen = a / (a + c) and pre = a / (a + b).
  ConfusionMatrix to_confusion() const;
};

enum class PairPolicy {
  integer_only,      // reject matrices with fractional cells
  allow_fractional,  // apply the counting identities to real masses as-is
};

/// Closed-form pair counts:
///   a = (sum m_ij^2 - m) / 2
///   b = (sum_i m_i.^2 - m) / 2 - a
///   c = (sum_j m_.j^2 - m) / 2 - a
///   d = m(m-1)/2 - a - b - c
/// Throws ValidationError on fractional cells under integer_only (use
/// one_vs_rest for soft matrices) and when m < 2.
BinaryCounts pairs_binary(const ConfusionMatrix& m, PairPolicy policy = PairPolicy::integer_only);

/// The uncorrected identities b = P/2 - a, c = Q/2 - a,
/// d = m(m-1)/2 - (P + Q)/2 + a. They double-count the m self-pairs and do
/// not agree with direct enumeration; kept only for comparison reports.
BinaryCounts pairs_binary_uncorrected(const ConfusionMatrix& m);

/// Brute-force pair enumeration over the expanded observation list. O(m^2);
/// requires an integer matrix with m <= kPairOracleLimit.
BinaryCounts pairs_binary_oracle(const ConfusionMatrix& m);

inline constexpr double kPairOracleLimit = 1e4;

/// 2x2 matrix of class j (0-based) against all other classes, class j
/// first: [[m_jj, sum_{k!=j} m_jk], [sum_{k!=j} m_kj, sum_{k,l!=j} m_kl]].
ConfusionMatrix one_vs_rest(const ConfusionMatrix& m, std::size_t j);

}  // namespace eve
