#pragma once

#include <stdexcept>
#include <string>

namespace fracspec {

/// Base class for all errors raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Argument outside the mathematical domain of an operation (t <= 0, x <= 0, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Power exponent for which the variable-order power rule is undefined.
class UnsupportedExponent : public Error {
 public:
  UnsupportedExponent(const std::string& what, double exponent)
      : Error(what), exponent_(exponent) {}
  double exponent() const noexcept { return exponent_; }

 private:
  double exponent_;
};

/// Problem definition violates an invariant (maps to CLI exit code 2).
class ValidationError : public Error {
 public:
  using Error::Error;
};

/// Numerical failure: singular systems, non-finite values (exit code 3).
class NumericalError : public Error {
 public:
  using Error::Error;
};

/// File or stream failure (exit code 4).
class IoError : public Error {
 public:
  using Error::Error;
};

}  // namespace fracspec
