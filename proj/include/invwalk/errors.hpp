#pragma once

#include <stdexcept>
#include <string>

namespace invwalk {

/// Thrown when a computation would exceed a configured resource budget
/// (e.g. exhaustive enumeration over too many words). Maps to CLI exit 3.
class budget_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Thrown when an exact computation contradicts a mathematical identity the
/// pipeline relies on (non-integer sequence entry, n-dependent correction,
/// broken bound sandwich). Maps to CLI exit 4.
class math_assertion_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace invwalk
