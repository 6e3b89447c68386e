#pragma once

#include <stdexcept>

namespace liederiv {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed or inconsistent input: dimension mismatches, bad rational
/// literals, structure-constant tables of the wrong shape, and the like.
class InputError : public Error {
 public:
  using Error::Error;
};

/// The operation needs structure the given objects do not carry
/// (no grading element, non-diagonal grading action, no usable isomorphism).
class UnsupportedError : public Error {
 public:
  using Error::Error;
};

/// A mathematical hypothesis the operation relies on fails to hold for the
/// given input.
class HypothesisError : public Error {
 public:
  using Error::Error;
};

/// Filesystem or serialization failure.
class IoError : public Error {
 public:
  using Error::Error;
};

}  // namespace liederiv
