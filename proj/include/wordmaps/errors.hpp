#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

#include "wordmaps/bigint.hpp"

namespace wordmaps {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed word text. `position` is the 1-based character column.
class WordParseError : public Error {
 public:
  WordParseError(const std::string& msg, size_t position)
      : Error(msg + " (at position " + std::to_string(position) + ")"),
        position(position) {}
  size_t position;
};

class GroupSpecError : public Error {
 public:
  using Error::Error;
};

class ElementParseError : public Error {
 public:
  using Error::Error;
};

// A caller violated a documented precondition (tuple arity, r > n, even
// prime for a tower, ...). Distinct from parse errors so the CLI can map
// both onto the usage exit code while tests can tell them apart.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

// An exhaustive operation refused to start: the up-front element-operation
// estimate exceeds the configured budget.
class BudgetExceeded : public Error {
 public:
  BudgetExceeded(BigInt required_ops, uint64_t limit)
      : Error("budget exceeded: operation requires about " + required_ops.str() +
              " element operations, budget is " + std::to_string(limit)),
        required(std::move(required_ops)),
        limit(limit) {}
  BigInt required;
  uint64_t limit;
};

inline void require_budget(const BigInt& required, uint64_t limit) {
  if (required > limit) throw BudgetExceeded(required, limit);
}

inline constexpr uint64_t kDefaultBudget = 1'000'000'000ull;

}  // namespace wordmaps
