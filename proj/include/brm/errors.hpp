#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace brm {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Invalid parameter for a constructor (kappa = 0, lambda = -1, ...).
struct DomainError : Error {
  using Error::Error;
};

// Trace parameters violate a defining equation of a component.
struct ConstraintError : Error {
  using Error::Error;
};

// The requested matrices share an eigenvector.
struct ReducibleError : Error {
  using Error::Error;
};

// A formula entry that must be invertible vanished.
struct DegenerateError : Error {
  using Error::Error;
};

// theta^2 landed on one of the hypersurfaces removed from the cover base.
struct ExcludedHypersurfaceError : Error {
  using Error::Error;
};

// Polynomial division left a remainder above tolerance.
struct NotDivisibleError : Error {
  using Error::Error;
};

struct IndexError : Error {
  using Error::Error;
};

// No component's membership equations hold for the given character.
struct UnclassifiedError : Error {
  using Error::Error;
};

struct MissingThetaError : Error {
  using Error::Error;
};

struct LabelMismatchError : Error {
  using Error::Error;
};

struct ZeroPolynomialError : Error {
  using Error::Error;
};

struct ParseError : Error {
  std::size_t position;
  ParseError(const std::string& msg, std::size_t pos)
      : Error(msg + " (at position " + std::to_string(pos) + ")"),
        position(pos) {}
};

namespace defaults {
inline constexpr double tol_abs = 1e-9;
inline constexpr double prune_threshold = 1e-12;
}  // namespace defaults

}  // namespace brm
