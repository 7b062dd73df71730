#pragma once

#include <stdexcept>
#include <string>

namespace conewright {

// Base class for every error raised by the library.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Invalid construction or usage: mismatched rings, malformed presentations,
// rank mismatches, out-of-range parameters, unknown catalog names.
struct ConfigError : Error {
  using Error::Error;
};

// The divisor pushforward system has no admissible solution (no rational
// root, no root with the required sign pattern, or an ambiguous pair).
struct SolverError : Error {
  using Error::Error;
};

// An internal consistency invariant failed; indicates a defect in the model
// data or the pipelines rather than in the caller's input.
struct InternalError : Error {
  using Error::Error;
};

}  // namespace conewright
