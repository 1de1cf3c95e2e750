#pragma once

#include <stdexcept>
#include <string>

namespace fdt {

/// Argument outside the domain of an operation.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Argument at (or within rounding of) a pole of the function.
class PoleError : public DomainError {
 public:
  using DomainError::DomainError;
};

/// A series or adaptive quadrature failed to reach its tolerance.
class ConvergenceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace fdt
