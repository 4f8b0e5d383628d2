#pragma once

#include <stdexcept>
#include <string>

namespace specfactor {

// Caller violated a documented precondition (bad N, out-of-range d, ...).
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A configured resource cap (sieve size, qubit count, grid nodes) was hit.
class ResourceLimitError : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

// Numerical pipeline failed: blow-up, non-convergence, failed cross-check.
class NumericalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace specfactor
