#pragma once

#include <stdexcept>
#include <string>

namespace driftreg {

// Base class for all library errors.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A caller violated a documented precondition (bad dims, bad range, K < 2).
struct InvalidArgument : Error {
  using Error::Error;
};

// Input data could not be read or fails its invariants (file IO, decoding,
// constant scenes, dimension mismatches discovered while loading).
struct DataError : Error {
  using Error::Error;
};

// A computation has no defined result (all-zero frames, undefined argmax).
struct NumericalError : Error {
  using Error::Error;
};

}  // namespace driftreg
