#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace specsl {

/// Malformed input: wrong table dimensions, out-of-range indices, bad JSON.
class StructuralError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An operation was called on an input that does not meet its precondition
/// (non-principal structure, non-additive target, not a homomorphism, ...).
class PreconditionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An exhaustive search or construction would exceed its configured budget.
class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A property that the mathematics guarantees was observed to fail at
/// runtime. Seeing this means a bug, never bad input.
class InvariantViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// A morphism argument failed the predicate the operation requires.
class NotAHomomorphism : public PreconditionError {
 public:
  NotAHomomorphism(const std::string& what, std::vector<int> witness)
      : PreconditionError(what), witness_(std::move(witness)) {}
  const std::vector<int>& witness() const noexcept { return witness_; }

 private:
  std::vector<int> witness_;
};

}  // namespace specsl
