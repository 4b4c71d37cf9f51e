#pragma once

#include <stdexcept>
#include <string>

namespace modunits {

// Base of every error raised by the library. Subclasses name the failed
// precondition; callers that only care about "bad input" can catch Error.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class NotDivisible : public Error {
 public:
  NotDivisible() : Error("polynomial division has a nonzero remainder") {}
};

class RangeError : public Error {
 public:
  using Error::Error;
};

class FactorizationIncomplete : public Error {
 public:
  using Error::Error;
};

class ZeroSeries : public Error {
 public:
  ZeroSeries() : Error("series is zero to its tracked precision") {}
};

class PrecisionMismatch : public Error {
 public:
  using Error::Error;
};

class BadIndex : public Error {
 public:
  using Error::Error;
};

class PhaseNotRational : public Error {
 public:
  using Error::Error;
};

class NotInS : public Error {
 public:
  using Error::Error;
};

class InsufficientPrecision : public Error {
 public:
  using Error::Error;
};

class NotAUnitProduct : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace modunits
