#pragma once

#include <stdexcept>
#include <string>

namespace fixlab {

// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DegreeMismatch : public Error {
 public:
  using Error::Error;
};

// A group, automorphism group or search exceeded its configured size cap.
class CapExceeded : public Error {
 public:
  using Error::Error;
};

// An operation was called with inputs violating its documented preconditions.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

// An internal invariant failed. Always indicates a bug in this library.
class InvariantViolation : public Error {
 public:
  using Error::Error;
};

// A search that a proven result guarantees to succeed came back empty.
class TheoremViolation : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

class IoError : public Error {
 public:
  using Error::Error;
};

}  // namespace fixlab
