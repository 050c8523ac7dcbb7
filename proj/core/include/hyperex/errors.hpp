#pragma once

#include <stdexcept>
#include <string>

namespace hyperex {

/// Argument outside the mathematical domain of an operation.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A complex argument landed on the branch cut of the principal square root.
class BranchCutError : public DomainError {
 public:
  using DomainError::DomainError;
};

/// A (dimension, exponent) or (dimension, fold) pair with no implementation.
class UnsupportedError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Malformed input object (non-orthogonal matrix, bad grid, ...).
class ValidationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// The quadrature or sampling budget cannot deliver the requested accuracy.
class BudgetError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace hyperex
