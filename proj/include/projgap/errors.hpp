#pragma once

#include <stdexcept>
#include <string>

namespace projgap {

// Precondition violated by the caller (bad axis, wrong dimension, set not in X_n, ...).
struct domain_error : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// A count or product left the range of 64-bit signed integers.
struct overflow_error : std::overflow_error {
  using std::overflow_error::overflow_error;
};

// An exhaustive search was asked to go beyond its documented budget.
struct budget_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Malformed point-set text.
struct parse_error : std::runtime_error {
  parse_error(const std::string& what, std::size_t line)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

}  // namespace projgap
