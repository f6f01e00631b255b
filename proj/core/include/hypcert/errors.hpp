#pragma once

#include <stdexcept>
#include <string>

namespace hypcert {

/// Root of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed or inconsistent input (configuration files, profiles, flags).
class ConfigError : public Error {
 public:
  using Error::Error;
};

/// A mathematical precondition failed (no real root, cross-field operation, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// An internal invariant was violated. Always a bug, never an input condition.
class InvariantError : public Error {
 public:
  using Error::Error;
};

}  // namespace hypcert
