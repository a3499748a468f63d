#pragma once

#include <stdexcept>
#include <string>

namespace hrp {

// Base of every error raised by the library. Callers that only care about
// "something went wrong" catch this; the CLI maps subclasses to exit codes.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed or unsupported input (bad minimal polynomial, bad JSON, ...).
class InputError : public Error {
 public:
  using Error::Error;
};

// Constant coefficient not divisible by M(0); a digit-selection bug.
class DivisibilityError : public Error {
 public:
  using Error::Error;
};

// Root separation or a sign decision did not succeed within the bit budget.
class PrecisionExhausted : public Error {
 public:
  using Error::Error;
};

class SearchExhausted : public Error {
 public:
  SearchExhausted(const std::string& what, long attempted_radius)
      : Error(what), attempted_radius_(attempted_radius) {}
  long attempted_radius() const noexcept { return attempted_radius_; }

 private:
  long attempted_radius_;
};

class BoundaryUndecidable : public Error {
 public:
  using Error::Error;
};

class GuardExceeded : public Error {
 public:
  using Error::Error;
};

}  // namespace hrp
