#pragma once

#include <stdexcept>
#include <string>

namespace fuzzyspec {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input: bad node lists, out-of-range values, bad configuration.
class ValidationError : public Error {
 public:
  using Error::Error;
};

/// An argument lies outside the mathematical domain of the operation.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// A documented precondition of an operation does not hold.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// The input sequence is not the nonlinear spectrum of any fuzzy set.
class InvalidSequenceError : public Error {
 public:
  using Error::Error;
};

/// The operation is not available for this input family.
class UnsupportedError : public Error {
 public:
  using Error::Error;
};

/// A numerical procedure failed to reach its accuracy target.
class NumericError : public Error {
 public:
  NumericError(const std::string& what, double residual)
      : Error(what), residual_(residual) {}
  explicit NumericError(const std::string& what) : NumericError(what, 0.0) {}

  double residual() const noexcept { return residual_; }

 private:
  double residual_;
};

/// The defuzzification pipeline produced an inconsistent arc system.
class ReconstructionError : public NumericError {
 public:
  using NumericError::NumericError;
};

}  // namespace fuzzyspec
