#pragma once

#include <stdexcept>
#include <string>

namespace projgb {

/// Raised for arguments that violate an operation's preconditions
/// (length mismatches, zero divisors, malformed point sets, ...).
class InputError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// Malformed textual input: rationals, JSON documents, exponent vectors.
class ParseError : public InputError {
public:
  using InputError::InputError;
};

/// Leading data requested from the zero polynomial.
class UndefinedLeadingError : public std::domain_error {
public:
  UndefinedLeadingError() : std::domain_error("zero polynomial has no leading term") {}
};

/// A canonical element was requested for a standard monomial.
class NotInIdealError : public std::domain_error {
public:
  using std::domain_error::domain_error;
};

class UnsupportedRenderError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// A computed basis failed its own certificate after every allowed retry.
class CertificationError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

} // namespace projgb
