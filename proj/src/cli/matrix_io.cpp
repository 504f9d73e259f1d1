#include "eve/cli/matrix_io.hpp"

#include <charconv>
#include <fstream>
#include <optional>
#include <sstream>
#include <vector>

#include <fmt/format.h>

#include "eve/errors.hpp"

namespace eve::cli {

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

std::vector<std::string_view> split(std::string_view line, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    const auto pos = line.find(sep, start);
    out.push_back(trim(line.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start)));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

template <typename T>
std::optional<T> parse_number(std::string_view field) {
  if (!field.empty() && field.front() == '+') field.remove_prefix(1);
  T value{};
  const auto* end = field.data() + field.size();
  const auto [ptr, ec] = std::from_chars(field.data(), end, value);
  if (ec != std::errc{} || ptr != end || field.empty()) return std::nullopt;
  return value;
}

// Calls fn(line_number, content) for each non-blank, non-comment line.
template <typename Fn>
void for_each_data_line(std::string_view text, Fn&& fn) {
  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    const auto pos = text.find('\n', start);
    const auto raw = text.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start);
    ++line_no;
    const auto line = trim(raw);
    if (!line.empty() && line.front() != '#') fn(line_no, line);
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
}

}  // namespace

ConfusionMatrix parse_matrix_csv(std::string_view text) {
  std::vector<std::vector<double>> rows;
  std::size_t width = 0;
  for_each_data_line(text, [&](std::size_t line_no, std::string_view line) {
    const auto fields = split(line, ',');
    if (rows.empty()) {
      width = fields.size();
    } else if (fields.size() != width) {
      throw ParseError("expected " + std::to_string(width) + " fields, found " + std::to_string(fields.size()),
                       line_no);
    }
    std::vector<double> row;
    row.reserve(fields.size());
    for (std::size_t k = 0; k < fields.size(); ++k) {
      const auto v = parse_number<double>(fields[k]);
      if (!v) throw ParseError("not a number: '" + std::string(fields[k]) + "'", line_no, k + 1);
      row.push_back(*v);
    }
    rows.push_back(std::move(row));
  });
  if (rows.empty()) throw ParseError("no matrix rows found", 0);
  if (rows.size() != width) {
    throw ValidationError("confusion matrix must be square, got " + std::to_string(rows.size()) + "x" +
                          std::to_string(width));
  }
  return ConfusionMatrix::from_dense(rows);
}

ConfusionMatrix parse_labels(std::string_view text, bool soft) {
  std::vector<int> truth;
  std::vector<int> pred;
  std::vector<std::vector<double>> memberships;
  std::size_t arity = 0;
  for_each_data_line(text, [&](std::size_t line_no, std::string_view line) {
    const auto fields = split(line, '\t');
    if (arity == 0) {
      arity = fields.size();
      if (!soft && arity != 2) throw ParseError("hard labels need exactly 2 tab-separated columns", line_no);
      if (soft && arity < 3) throw ParseError("soft labels need a true label and at least 2 memberships", line_no);
    } else if (fields.size() != arity) {
      throw ParseError("expected " + std::to_string(arity) + " columns, found " + std::to_string(fields.size()),
                       line_no);
    }
    const auto t = parse_number<int>(fields[0]);
    if (!t) throw ParseError("true label is not an integer: '" + std::string(fields[0]) + "'", line_no, 1);
    truth.push_back(*t);
    if (!soft) {
      const auto p = parse_number<int>(fields[1]);
      if (!p) throw ParseError("predicted label is not an integer: '" + std::string(fields[1]) + "'", line_no, 2);
      pred.push_back(*p);
      return;
    }
    std::vector<double> w;
    w.reserve(arity - 1);
    for (std::size_t k = 1; k < fields.size(); ++k) {
      const auto v = parse_number<double>(fields[k]);
      if (!v) throw ParseError("membership is not a number: '" + std::string(fields[k]) + "'", line_no, k + 1);
      w.push_back(*v);
    }
    memberships.push_back(std::move(w));
  });
  if (truth.empty()) throw ParseError("no observations found", 0);
  if (soft) return ConfusionMatrix::from_soft(truth, memberships);
  return ConfusionMatrix::from_labels(truth, pred);
}

std::string render_matrix_csv(const ConfusionMatrix& m) {
  std::string out;
  for (std::size_t i = 0; i < m.n(); ++i) {
    for (std::size_t j = 0; j < m.n(); ++j) {
      if (j) out += ',';
      out += fmt::format("{}", m(i, j));
    }
    out += '\n';
  }
  return out;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open '" + path + "'", 0);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace eve::cli
