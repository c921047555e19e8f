#pragma once

#include <stdexcept>

namespace troploc {

// Base class for every error thrown by the library.
struct TropError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// NaN or +inf handed to a constructor, or a value that overflowed.
struct InvalidValue : TropError {
  using TropError::TropError;
};

// Bottom element raised to a nonpositive exponent.
struct BottomPower : TropError {
  using TropError::TropError;
};

// A bottom entry where a zero-free vector is required.
struct BottomEntry : TropError {
  using TropError::TropError;
};

struct DimensionMismatch : TropError {
  using TropError::TropError;
};

struct NonSquare : TropError {
  using TropError::TropError;
};

// Spectral routine applied to a matrix whose support digraph is not
// strongly connected.
struct Reducible : TropError {
  using TropError::TropError;
};

struct AlphaOutOfRange : TropError {
  using TropError::TropError;
};

struct InvalidInstance : TropError {
  using TropError::TropError;
};

struct MissingCaps : TropError {
  using TropError::TropError;
};

// Oracle input beyond the documented size limits.
struct TooLarge : TropError {
  using TropError::TropError;
};

// Every grid cell violates the distance caps.
struct EmptyFeasibleGrid : TropError {
  using TropError::TropError;
};

// Malformed instance or matrix file.
struct ParseError : TropError {
  using TropError::TropError;
};

}  // namespace troploc
