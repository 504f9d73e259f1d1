#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace eve {

/// A precondition the caller was responsible for was not met (non-square
/// input to a square-only routine, asymmetric input to the eigensolver, ...).
class ContractViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Input data is well-formed but not acceptable: negative counts, empty
/// classes where a column sum is required, label out of range.
class ValidationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Text input could not be parsed. Line and column are 1-based; column 0
/// means "whole line" and line 0 means the input as a whole.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t line, std::size_t column = 0)
      : std::runtime_error(line == 0 ? what
                                     : "line " + std::to_string(line) +
                                           (column > 0 ? ", column " + std::to_string(column) : std::string{}) +
                                           ": " + what),
        line_(line),
        column_(column) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

/// A measure that cannot be computed for this input shape.
class UnsupportedMeasure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace eve
