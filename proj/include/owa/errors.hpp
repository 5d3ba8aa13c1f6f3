#pragma once

#include <stdexcept>
#include <string>

namespace owa {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Input that violates a documented invariant (bad weights, bad parameters,
/// malformed scheme files).
class ValidationError : public Error {
 public:
  using Error::Error;
};

/// Argument outside the domain of a function, e.g. Q(x) with x > 1.
class DomainError : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

/// Vectors of incompatible length.
class DimensionError : public Error {
 public:
  using Error::Error;
};

/// Adaptive quadrature ran out of subdivision depth before meeting its
/// tolerance. Carries the best estimate obtained so far.
class ConvergenceError : public Error {
 public:
  ConvergenceError(const std::string& what, double estimate, double error_bound)
      : Error(what), estimate_(estimate), error_bound_(error_bound) {}

  double estimate() const noexcept { return estimate_; }
  double error_bound() const noexcept { return error_bound_; }

 private:
  double estimate_;
  double error_bound_;
};

}  // namespace owa
