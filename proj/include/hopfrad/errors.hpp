#pragma once

#include <stdexcept>
#include <string>

namespace hopfrad {

// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

// An operation's stated precondition does not hold (e.g. "R lacks unit").
class PreconditionFailed : public Error {
 public:
  using Error::Error;
};

// Enumeration bound exceeded.
class CapExceeded : public Error {
 public:
  using Error::Error;
};

// The requested backend cannot handle this input (characteristic too small,
// non-split semisimple quotient, missing normalized integral, ...).
class Unsupported : public Error {
 public:
  using Error::Error;
};

// Two independent computation routes disagree on a proven identity.
class Contradiction : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace hopfrad
