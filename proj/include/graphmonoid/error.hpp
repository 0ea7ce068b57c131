#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace graphmonoid {

// Base class of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// The caller handed over something that violates a precondition: an invalid
// graph, an unknown vertex, a malformed document, a generator outside a
// map's domain.
class InvalidInput : public Error {
 public:
  using Error::Error;
};

// Completion ran out of its step budget. This is "undecided", never a verdict.
class BudgetExhausted : public Error {
 public:
  BudgetExhausted(std::size_t budget, std::size_t rules)
      : Error("completion budget of " + std::to_string(budget) +
              " pair reductions exhausted with " + std::to_string(rules) +
              " rules"),
        budget_(budget) {}

  std::size_t budget() const noexcept { return budget_; }

 private:
  std::size_t budget_;
};

// A desingularization was truncated too early for the requested element.
class TruncationError : public InvalidInput {
 public:
  TruncationError(std::size_t level, std::size_t required)
      : InvalidInput("truncation level " + std::to_string(level) +
                     " too small; required level is " +
                     std::to_string(required)),
        level_(level),
        required_(required) {}

  std::size_t level() const noexcept { return level_; }
  std::size_t required_level() const noexcept { return required_; }

 private:
  std::size_t level_;
  std::size_t required_;
};

}  // namespace graphmonoid
