#pragma once

#include <stdexcept>
#include <string>

namespace aszeta {

// Malformed parameters: composite modulus, bad family, d not dividing n, ...
class BadInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// An enumeration would exceed the configured budget.
class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A mathematical invariant failed: non-integral Newton coefficient, negative
// multiplicity, inexact division. Always a bug or inconsistent input data.
class InvariantViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

class CacheCorruption : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace aszeta
