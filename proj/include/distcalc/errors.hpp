#pragma once

#include <stdexcept>
#include <string>

namespace distcalc {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Argument outside the domain of an operation (log 0, k < -1, ...).
struct DomainError : Error {
  using Error::Error;
};

// Gamma function evaluated at a non-positive integer.
struct PoleError : DomainError {
  using DomainError::DomainError;
};

// The requested object has no finite decomposition in the atom basis,
// or an operation would leave the closed rule table.
struct NotRepresentable : Error {
  using Error::Error;
};

// An operation was applied to an atom kind it does not support.
struct UnsupportedAtom : Error {
  using Error::Error;
};

// Pole clustering in the partial fraction decomposition is ambiguous
// at the working tolerance.
struct IllConditioned : Error {
  using Error::Error;
};

// Adaptive quadrature could not reach the requested accuracy.
struct QuadratureFailure : Error {
  using Error::Error;
};

struct ParseError : Error {
  int position;
  std::string expected;
  ParseError(const std::string& msg, int pos, std::string exp = {})
      : Error(msg), position(pos), expected(std::move(exp)) {}
};

}  // namespace distcalc
