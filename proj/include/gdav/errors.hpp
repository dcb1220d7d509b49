#pragma once

#include <stdexcept>
#include <string>

namespace gdav {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed or unsupported user input: group specs, table files, generator lists.
class InputError : public Error {
 public:
  using Error::Error;
};

/// A subset of the group was expected to generate (a subgroup containing) an
/// element, and it does not.
class NotGeneratedError : public Error {
 public:
  using Error::Error;
};

/// A result was requested from a search that stopped early (length cap or timeout).
class IncompleteError : public Error {
 public:
  using Error::Error;
};

/// A mathematical invariant the engine relies on was observed to fail.
class InvariantError : public Error {
 public:
  using Error::Error;
};

/// A size limit of the engine or of a guard-railed oracle was exceeded.
class LimitError : public Error {
 public:
  using Error::Error;
};

}  // namespace gdav
