#pragma once

#include <stdexcept>
#include <string>

namespace planch {

/// Malformed or out-of-range input data.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A documented precondition of an operation does not hold.
class PreconditionError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Evaluation hit a pole of a spectral function.
class PoleError : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

/// A quadrature or enumeration budget was exhausted.
class BudgetError : public std::runtime_error {
 public:
  BudgetError(const std::string& what, double achieved_error)
      : std::runtime_error(what), achieved_error_(achieved_error) {}
  double achieved_error() const noexcept { return achieved_error_; }

 private:
  double achieved_error_;
};

}  // namespace planch
