#pragma once

#include <stdexcept>
#include <string>

namespace hsw {

// Base of everything thrown by the library.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Malformed textual input: mask syntax, rational syntax, DIMACS, program files.
// The CLI maps these to exit code 2.
struct ParseError : Error {
  using Error::Error;
};

// Structurally valid input that violates an operation's domain.
// The CLI maps these to exit code 3.
struct DomainError : Error {
  using Error::Error;
};

struct InvalidRational : DomainError {
  using DomainError::DomainError;
};

struct InvalidMask : ParseError {
  using ParseError::ParseError;
};

struct TruncationExceeded : DomainError {
  using DomainError::DomainError;
};

struct NonAdjacentPairs : DomainError {
  using DomainError::DomainError;
};

struct InvalidConvexity : DomainError {
  using DomainError::DomainError;
};

struct NotIrrational : DomainError {
  using DomainError::DomainError;
};

struct InconsistentCut : DomainError {
  using DomainError::DomainError;
};

struct LengthMismatch : DomainError {
  using DomainError::DomainError;
};

struct CertificateTooShort : DomainError {
  using DomainError::DomainError;
};

struct WrongWidth : DomainError {
  using DomainError::DomainError;
};

struct TooLarge : DomainError {
  using DomainError::DomainError;
};

struct InvalidWidth : DomainError {
  using DomainError::DomainError;
};

struct UnspecifiedByPaper : DomainError {
  using DomainError::DomainError;
};

struct PartialAssignment : DomainError {
  using DomainError::DomainError;
};

}  // namespace hsw
