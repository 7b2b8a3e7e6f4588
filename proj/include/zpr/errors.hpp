#pragma once

#include <stdexcept>
#include <string>

namespace zpr {

// Base for every error raised by the library. The CLI maps subclasses to exit codes.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InvalidRing : public Error {
 public:
  using Error::Error;
};

class MixedRings : public Error {
 public:
  MixedRings() : Error("operands belong to different rings") {}
};

class NotAUnit : public Error {
 public:
  using Error::Error;
};

class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

class ZeroVector : public Error {
 public:
  ZeroVector() : Error("leading data of the zero vector is undefined") {}
};

class ParseError : public Error {
 public:
  using Error::Error;
};

class IterationLimitExceeded : public Error {
 public:
  using Error::Error;
};

class RingNotField : public Error {
 public:
  RingNotField() : Error("PLM check requires r = 1; use the p-PLM check for r > 1") {}
};

class NotInModule : public Error {
 public:
  using Error::Error;
};

class ValidationFailed : public Error {
 public:
  using Error::Error;
};

class PivotNotUnique : public Error {
 public:
  using Error::Error;
};

class EnumerationTooLarge : public Error {
 public:
  using Error::Error;
};

}  // namespace zpr
