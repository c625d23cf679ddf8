#pragma once

#include <stdexcept>
#include <string>

namespace coflowsim {

// Base for every domain error thrown by the library. Callers that want a
// blanket net catch this; tests usually catch the concrete type.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A lower bound (or anything else that needs positive demand) was asked about
// an all-zero demand matrix.
struct ZeroDemandError : Error {
  using Error::Error;
};

// A coflow with no positive demand entries reached workload construction.
struct EmptyCoflowError : Error {
  using Error::Error;
};

// Matrix/port-count shapes that should line up do not.
struct DimensionMismatchError : Error {
  using Error::Error;
};

struct DuplicateCoflowIdError : Error {
  using Error::Error;
};

// Bad network/run configuration (negative rates, EPS with nonzero delta,
// missing seed for the randomized baseline, unknown sweep axis, ...).
struct ConfigError : Error {
  using Error::Error;
};

// Malformed input file (trace CSV, receivers JSON, schedule JSON, config).
struct ParseError : Error {
  using Error::Error;
};

// The exhaustive oracle refuses instances beyond its enumeration limits.
struct InstanceTooLargeError : Error {
  using Error::Error;
};

// A schedule is missing events for a coflow whose completion time was asked.
struct MissingCoflowError : Error {
  using Error::Error;
};

}  // namespace coflowsim
