#pragma once

#include <stdexcept>
#include <string>

namespace tnn {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A requested enumeration would exceed the configured cap.
struct CapExceededError : Error {
  using Error::Error;
};

// Malformed input or a violated operation precondition.
struct InvalidInputError : Error {
  using Error::Error;
};

// v is not below w in Bruhat order, so no subexpression for v exists.
struct NoSubexpressionError : Error {
  using Error::Error;
};

// The length-additivity precondition of a reduction map was violated.
struct ReductionError : Error {
  using Error::Error;
};

// An internal consistency check of a classification failed; indicates a bug.
struct ClassificationError : Error {
  using Error::Error;
};

// A degenerated point classified outside the claimed closure.
struct ClosureViolationError : Error {
  using Error::Error;
};

}  // namespace tnn
