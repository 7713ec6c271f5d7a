#pragma once

#include <stdexcept>
#include <string>

namespace aen {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Bad parameter values (unknown names, out-of-range arguments).
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

// Lengths, dimensions or party counts that do not line up.
class ShapeMismatch : public Error {
 public:
  using Error::Error;
};

// A state whose norm or trace is too far from one to be renormalized.
class NormError : public Error {
 public:
  using Error::Error;
};

// A numerical invariant was violated (negative eigenvalues, non-Hermitian
// input, non-convergence).
class NumericalError : public Error {
 public:
  using Error::Error;
};

// Dense representation would exceed the supported dimension.
class DimensionLimit : public Error {
 public:
  using Error::Error;
};

}  // namespace aen
