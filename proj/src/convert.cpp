#include "eve/convert.hpp"

#include <cmath>
#include <string>
#include <vector>

#include "eve/errors.hpp"

namespace eve {

namespace {

struct SquareSums {
  double m = 0.0;
  double cells = 0.0;  // sum m_ij^2
  double rows = 0.0;   // sum m_i.^2 (predicted classes)
  double cols = 0.0;   // sum m_.j^2 (true classes)
};

SquareSums square_sums(const ConfusionMatrix& cm) {
  SquareSums s;
  s.m = cm.total();
  for (double v : cm.matrix().data()) s.cells += v * v;
  for (double v : cm.row_sums()) s.rows += v * v;
  for (double v : cm.col_sums()) s.cols += v * v;
  return s;
}

void require_integer(const ConfusionMatrix& cm, const char* who) {
  if (!cm.is_integer_valued()) {
    throw ValidationError(std::string(who) +
                          ": pair counting needs integer counts; use one-vs-rest conversion for real-valued matrices");
  }
}

}  // namespace

ConfusionMatrix BinaryCounts::to_confusion() const { return ConfusionMatrix::from_dense({{a, b}, {c, d}}); }

BinaryCounts pairs_binary(const ConfusionMatrix& cm, PairPolicy policy) {
  if (policy == PairPolicy::integer_only) require_integer(cm, "pairs_binary");
  const auto s = square_sums(cm);
  if (s.m < 2.0) throw ValidationError("pairs_binary: need at least two observations");
  BinaryCounts r;
  r.m_pairs = s.m * (s.m - 1.0) / 2.0;
  r.a = (s.cells - s.m) / 2.0;
  r.b = (s.rows - s.m) / 2.0 - r.a;
  r.c = (s.cols - s.m) / 2.0 - r.a;
  r.d = r.m_pairs - r.a - r.b - r.c;
  return r;
}

BinaryCounts pairs_binary_uncorrected(const ConfusionMatrix& cm) {
  const auto s = square_sums(cm);
  BinaryCounts r;
  r.m_pairs = s.m * (s.m - 1.0) / 2.0;
  r.a = (s.cells - s.m) / 2.0;
  r.b = s.rows / 2.0 - r.a;
  r.c = s.cols / 2.0 - r.a;
  r.d = r.m_pairs - (s.rows + s.cols) / 2.0 + r.a;
  return r;
}

BinaryCounts pairs_binary_oracle(const ConfusionMatrix& cm) {
  require_integer(cm, "pairs_binary_oracle");
  if (cm.total() > kPairOracleLimit) throw ValidationError("pairs_binary_oracle: too many observations");

  struct Obs {
    std::size_t pred;
    std::size_t truth;
  };
  std::vector<Obs> obs;
  for (std::size_t i = 0; i < cm.n(); ++i)
    for (std::size_t j = 0; j < cm.n(); ++j) {
      const auto count = static_cast<long>(std::llround(cm(i, j)));
      for (long k = 0; k < count; ++k) obs.push_back({i, j});
    }
  if (obs.size() < 2) throw ValidationError("pairs_binary_oracle: need at least two observations");

  long a = 0, b = 0, c = 0, d = 0;
  for (std::size_t x = 0; x < obs.size(); ++x)
    for (std::size_t y = x + 1; y < obs.size(); ++y) {
      const bool same_pred = obs[x].pred == obs[y].pred;
      const bool same_true = obs[x].truth == obs[y].truth;
      if (same_pred && same_true) ++a;
      else if (same_pred) ++b;
      else if (same_true) ++c;
      else ++d;
    }
  BinaryCounts r;
  r.a = static_cast<double>(a);
  r.b = static_cast<double>(b);
  r.c = static_cast<double>(c);
  r.d = static_cast<double>(d);
  r.m_pairs = static_cast<double>(a + b + c + d);
  return r;
}

ConfusionMatrix one_vs_rest(const ConfusionMatrix& cm, std::size_t j) {
  const std::size_t n = cm.n();
  if (j >= n) {
    throw ValidationError("class index " + std::to_string(j + 1) + " out of range 1.." + std::to_string(n));
  }
  double tp = 0.0, fp = 0.0, fn = 0.0, tn = 0.0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) {
      const double v = cm(i, k);
      if (i == j && k == j) tp += v;
      else if (i == j) fp += v;
      else if (k == j) fn += v;
      else tn += v;
    }
  return ConfusionMatrix::from_dense({{tp, fp}, {fn, tn}});
}

}  // namespace eve
