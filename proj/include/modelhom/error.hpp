#pragma once

#include <stdexcept>
#include <string>

namespace modelhom {

/// Malformed or incompatible input: bad indices, universe mismatch, schema errors.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An equivalence operation was applied where it is not admissible.
class OperationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A bounded search ran out of its state budget.
class BudgetError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace modelhom
