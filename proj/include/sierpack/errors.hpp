#pragma once

#include <stdexcept>
#include <string>

namespace sierpack {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed descriptor, file or command-line value.
class ParseError : public Error {
 public:
  using Error::Error;
};

/// An operation was called outside its domain (bad k, non-edge, n <= l, ...).
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// A coloring that was supposed to be valid failed the verifier.
class VerificationError : public Error {
 public:
  using Error::Error;
};

/// A construction would exceed the configured vertex budget.
class BudgetError : public Error {
 public:
  using Error::Error;
};

}  // namespace sierpack
