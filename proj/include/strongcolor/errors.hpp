#pragma once

#include <stdexcept>
#include <string>

namespace strongcolor {

/// Malformed or invalid input: bad syntax, a leaf that is not a tree,
/// a self-loop, an out-of-range vertex.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An exact search ran out of its node budget before reaching a verdict.
class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A structural property that the algorithms rely on did not hold at runtime.
class InvariantViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace strongcolor
