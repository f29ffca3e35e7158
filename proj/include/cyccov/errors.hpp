#pragma once

#include <stdexcept>
#include <string>

namespace cyccov {

/// Invalid argument to a public operation (non-positive order, d < 2, ...).
class ArgumentError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Query outside the domain on which a function is defined.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Integer arithmetic would have overflowed.
class OverflowError : public std::overflow_error {
 public:
  using std::overflow_error::overflow_error;
};

/// A search or enumeration needs more than its configured budget.
class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Linear system with a vanishing determinant.
class SingularSystemError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace cyccov
