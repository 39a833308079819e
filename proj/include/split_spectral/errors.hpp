#pragma once

#include <stdexcept>
#include <string>

namespace split_spectral {

/// Bad user input: a violated precondition (range, parity, shape).
class ValidationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Operand shapes do not fit (apply, compose, pairing).
class DimensionMismatch : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

class DegenerateForm : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

/// Request would exceed an enumeration guard.
class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An internal identity that must hold did not.
class InvariantViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace split_spectral
