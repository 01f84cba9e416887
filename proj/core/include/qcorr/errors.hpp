#pragma once

#include <stdexcept>
#include <string>

namespace qcorr {

// Base for every error thrown by the library.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Input matrix fails the Hermiticity gate.
struct NonHermitianError : Error {
  using Error::Error;
};

// Operands have incompatible dimensions.
struct DimensionMismatchError : Error {
  using Error::Error;
};

// Bloch vector longer than the unit ball allows.
struct BlochNormError : Error {
  using Error::Error;
};

// Kraus set does not sum to the identity.
struct NotTracePreservingError : Error {
  using Error::Error;
};

// Channel failed validity checks required by the operation.
struct InvalidChannelError : Error {
  using Error::Error;
};

// Damping parameter outside [0, 1].
struct GammaRangeError : Error {
  using Error::Error;
};

// A direction argument is not unit length.
struct NonUnitVectorError : Error {
  using Error::Error;
};

// Constructed map would push states outside the Bloch ball.
struct NotPositiveError : Error {
  using Error::Error;
};

// Both case denominators of the nearest-CC formulas vanished.
struct DegenerateInputError : Error {
  using Error::Error;
};

// Oracle evaluation budget below the supported minimum.
struct BudgetError : Error {
  using Error::Error;
};

// Quadrature order below the supported minimum.
struct OrderError : Error {
  using Error::Error;
};

// Scalar argument outside its documented domain.
struct DomainError : Error {
  using Error::Error;
};

// Malformed JSON input or unknown schema.
struct ParseError : Error {
  using Error::Error;
};

}  // namespace qcorr
