#pragma once

#include <stdexcept>
#include <string>

namespace frl {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An argument violates an operation's precondition.
class DomainError : public Error {
 public:
  using Error::Error;
};

// A result exists mathematically but is not representable (e.g. gamma(200) as a double).
class RangeError : public Error {
 public:
  using Error::Error;
};

// refinement stalled above the tolerance
class AccuracyError : public Error {
 public:
  AccuracyError(const std::string& what, double estimate, double error_bound)
      : Error(what), estimate_(estimate), error_bound_(error_bound) {}

  double estimate() const { return estimate_; }
  double error_bound() const { return error_bound_; }

 private:
  double estimate_;
  double error_bound_;
};

// The function is eventually negative, so A(f) is infinite.
class NegativeAtInfinityError : public Error {
 public:
  using Error::Error;
};

// broken internal invariant
class InternalError : public Error {
 public:
  using Error::Error;
};

}  // namespace frl
