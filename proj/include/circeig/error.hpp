#pragma once

#include <stdexcept>
#include <string>

namespace circeig {

// Root of every error the library raises.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Empty input or mismatched dimensions.
class LengthError : public Error {
 public:
  using Error::Error;
};

// Argument outside the mathematical domain of an operation.
class DomainError : public Error {
 public:
  using Error::Error;
};

// Malformed user input (coefficient files, family specs, CLI values).
class ValidationError : public Error {
 public:
  using Error::Error;
};

// Storage or spectrum that should be Hermitian but is not.
class NotHermitianError : public Error {
 public:
  using Error::Error;
};

// Smallest eigenvalue of a matrix that must be positive definite is not
// safely positive.
class NotPositiveDefiniteError : public Error {
 public:
  using Error::Error;
};

}  // namespace circeig
