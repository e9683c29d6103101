#pragma once

#include <stdexcept>
#include <string>

namespace modelcore {

// Base of every error raised by this library.
class ModelError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Bad argument detected before any state was touched (lb > ub, NaN, ...).
class ValidationError : public ModelError {
 public:
  using ModelError::ModelError;
};

// A bit location or dense position that was never allocated.
class OutOfRangeError : public ModelError {
 public:
  using ModelError::ModelError;
};

// A handle whose entity has been deleted was used where a live one is needed.
class StaleHandleError : public ModelError {
 public:
  using ModelError::ModelError;
};

// The backend cannot represent the constraint kind and no bridge handled it.
class UnsupportedConstraintError : public ModelError {
 public:
  using ModelError::ModelError;
};

class CapacityError : public ModelError {
 public:
  using ModelError::ModelError;
};

// A backend received an index outside its dense range. When driven through
// Model this always means the handle->index mapping is wrong.
class ContractViolation : public ModelError {
 public:
  using ModelError::ModelError;
};

class IoError : public ModelError {
 public:
  using ModelError::ModelError;
};

class UsageError : public ModelError {
 public:
  using ModelError::ModelError;
};

}  // namespace modelcore
