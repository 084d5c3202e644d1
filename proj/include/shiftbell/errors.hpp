#pragma once

#include <stdexcept>
#include <string>

namespace shiftbell {

// Base for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Non-finite or out-of-domain numeric input.
class DomainError : public Error {
 public:
  using Error::Error;
};

// Invalid protocol or law parameters (delta out of range, k_bits < 1, ...).
class ConfigError : public Error {
 public:
  using Error::Error;
};

// The planar resultant used by Bob has (numerically) zero length.
class DegenerateResultantError : public Error {
 public:
  using Error::Error;
};

// Heaviside form evaluated exactly on one of its two ambiguous boundaries.
class BoundaryAmbiguityError : public Error {
 public:
  using Error::Error;
};

// Quadrature failed to reach the requested tolerance.
class NumericError : public Error {
 public:
  using Error::Error;
};

class UsageError : public Error {
 public:
  using Error::Error;
};

// A result that can only come from a protocol or estimator bug.
class InvariantViolation : public Error {
 public:
  using Error::Error;
};

}  // namespace shiftbell
