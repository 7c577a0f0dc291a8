#pragma once

#include <stdexcept>
#include <string>

namespace eqforge {

// Base class for all library errors.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// Invalid input parameters (bad group parameters, out-of-range arguments).
class DomainError : public Error {
public:
  using Error::Error;
};

// A rank decision fell inside the ambiguity band [cut, 10*cut) of singular
// values, so the nullspace dimension cannot be trusted.
class NumericalAmbiguityError : public Error {
public:
  using Error::Error;
};

// An integer-valued quantity was computed with a rounding residue above the
// accepted threshold.
class NumericalInconsistencyError : public Error {
public:
  using Error::Error;
};

// Newton corrector failed to converge during branch continuation.
class ContinuationError : public Error {
public:
  using Error::Error;
};

// Violated internal invariant; indicates a bug, not bad input.
class InternalError : public Error {
public:
  using Error::Error;
};

} // namespace eqforge
