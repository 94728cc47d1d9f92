#pragma once

#include <stdexcept>
#include <string>

namespace symc {

// Bad input: out-of-range parameters, non-membership, malformed data.
struct ArgumentError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct DimensionError : ArgumentError {
  using ArgumentError::ArgumentError;
};

// [x,y] != 0 where a commuting pair was required.
struct NonCommutingError : ArgumentError {
  using ArgumentError::ArgumentError;
};

struct UnsupportedFamily : ArgumentError {
  using ArgumentError::ArgumentError;
};

struct ClassificationError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A computed invariant failed; this always means a bug somewhere.
struct InternalError : std::logic_error {
  using std::logic_error::logic_error;
};

}  // namespace symc
