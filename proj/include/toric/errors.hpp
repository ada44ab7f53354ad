#pragma once

#include <stdexcept>
#include <string>

namespace toric {

/// Raised when caller-supplied data violates a documented precondition
/// (dimension mismatch, malformed simplex, infeasible cell, ...).
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class DimensionMismatch : public InputError {
 public:
  using InputError::InputError;
};

/// Operands belong to different groups or torsors.
class GroupMismatch : public InputError {
 public:
  using InputError::InputError;
};

/// A numeric check was asked to run on data that fails its precondition.
class PreconditionError : public InputError {
 public:
  using InputError::InputError;
};

/// A cochain handed to cocycle_to_class has a nonzero coboundary.
class NotACocycle : public InputError {
 public:
  using InputError::InputError;
};

}  // namespace toric
