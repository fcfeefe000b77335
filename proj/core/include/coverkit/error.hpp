#pragma once

#include <stdexcept>
#include <string>

namespace coverkit {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed or out-of-range user input (bad index, invalid parameters).
class InputError : public Error {
 public:
  using Error::Error;
};

/// A closed form was asked for outside the parameter regime where it holds.
class DomainError : public InputError {
 public:
  using InputError::InputError;
};

/// An enumeration bound (edge cap, vertex cap) would be exceeded.
class CapacityError : public Error {
 public:
  using Error::Error;
};

/// A proven identity or pathwise invariant failed. Indicates a bug.
class ConsistencyError : public Error {
 public:
  using Error::Error;
};

}  // namespace coverkit
