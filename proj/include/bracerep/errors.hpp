#pragma once

#include <stdexcept>

namespace bracerep {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Invalid p, q, label, gamma/mu or selector.
struct ParameterError : Error {
  using Error::Error;
};

/// An element does not belong to the group it was used with.
struct InvalidElementError : Error {
  using Error::Error;
};

/// A semidirect-product action failed its automorphism/homomorphism checks.
struct InvalidActionError : Error {
  using Error::Error;
};

/// Exhaustive work would exceed the configured element cap.
struct CapacityError : Error {
  using Error::Error;
};

/// Two independent computation routes disagree; indicates an upstream bug.
struct InconsistencyError : Error {
  using Error::Error;
};

/// Twist precondition action1 == action2 . f failed pointwise.
struct TwistMismatchError : Error {
  using Error::Error;
};

/// Matrix dimensions differ where they must agree.
struct ShapeError : Error {
  using Error::Error;
};

/// Internal invariant violated.
struct InternalError : Error {
  using Error::Error;
};

}  // namespace bracerep
