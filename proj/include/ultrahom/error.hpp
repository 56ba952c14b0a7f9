#pragma once

#include <stdexcept>
#include <string>

namespace ultrahom {

/// Base class for all errors raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed or inconsistent input (degree mismatch, element outside a group,
/// rejected partial automorphism). Maps to CLI exit code 2.
class InputError : public Error {
 public:
  using Error::Error;
};

/// A configured resource cap would be exceeded. Maps to CLI exit code 3.
class CapExceeded : public Error {
 public:
  using Error::Error;
};

/// A runtime re-check of a construction's hypotheses failed.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// Something that cannot happen if the implementation is correct.
class InternalError : public Error {
 public:
  using Error::Error;
};

}  // namespace ultrahom
