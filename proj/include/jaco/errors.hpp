#pragma once

#include <stdexcept>
#include <string>

namespace jaco {

// Thrown when an exact integer computation would leave the 64-bit range.
class ArithmeticOverflow : public std::overflow_error {
 public:
  using std::overflow_error::overflow_error;
};

// Argument outside the domain an operation is defined on.
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A digit string that breaks the generalized Zeckendorf digit rules.
class ValidationError : public std::invalid_argument {
 public:
  ValidationError(const std::string& what, std::size_t index)
      : std::invalid_argument(what), index_(index) {}

  // 1-based digit position that failed validation.
  std::size_t index() const noexcept { return index_; }

 private:
  std::size_t index_;
};

// Operation only defined for order a = 1.
class UnsupportedOrder : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A search that a proven result guarantees to terminate did not.
class TheoremViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace jaco
