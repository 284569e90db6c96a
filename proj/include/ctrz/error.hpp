#pragma once

#include <stdexcept>
#include <string>

namespace ctrz {

/// Malformed input: bad cycle strings, unknown datasets, bad JSON, resource caps.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// The data is self-consistent as code but mathematically wrong, e.g. a class
/// function that does not decompose into irreducibles with integer coefficients.
class ValidationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Two independent computations disagree. Never expected on correct inputs.
class InconsistencyError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace ctrz
