#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace leaktight {

/// Base class of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed automaton text, reported with a 1-based position.
class ParseError : public Error {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string& message)
      : Error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " +
              message),
        line_(line),
        column_(column) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

/// An automaton or argument violates a structural invariant.
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// Saturation produced more elements than the configured budget allows.
class BudgetExceeded : public Error {
 public:
  BudgetExceeded(std::size_t budget, std::size_t partial_size)
      : Error("closure budget of " + std::to_string(budget) +
              " elements exceeded (partial closure had " + std::to_string(partial_size) +
              " elements)"),
        budget_(budget),
        partial_size_(partial_size) {}

  std::size_t budget() const noexcept { return budget_; }
  std::size_t partial_size() const noexcept { return partial_size_; }

 private:
  std::size_t budget_;
  std::size_t partial_size_;
};

/// A word (or word family point) is longer than the evaluation budget.
class LengthBudgetExceeded : public Error {
 public:
  using Error::Error;
};

}  // namespace leaktight
