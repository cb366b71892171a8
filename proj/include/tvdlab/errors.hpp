#pragma once

#include <stdexcept>
#include <string>

namespace tvdlab {

// Every failure raised by the library derives from Error so callers can
// catch the whole family; the CLI maps the subclasses onto exit codes.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Input outside the mathematical domain of an operation (gamma <= 1,
// non-positive ratio, s <= r, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

// A power x^(gamma/alpha) or x^(-1/alpha) would leave the double range.
class OverflowError : public Error {
 public:
  using Error::Error;
};

// An interaction or Riemann problem whose solution contains vacuum.
class VacuumError : public Error {
 public:
  using Error::Error;
};

// A root could not be bracketed or polished.
class ConvergenceError : public Error {
 public:
  using Error::Error;
};

// A counterexample scan ran out of admissible parameters.
class SearchError : public Error {
 public:
  using Error::Error;
};

class QuadratureError : public Error {
 public:
  using Error::Error;
};

// The weak-interaction expansion is not applicable (A or D vanishes).
class DegenerateError : public Error {
 public:
  using Error::Error;
};

// Raised by the Glimm simulator when an interface Riemann problem
// produces vacuum.
class VacuumEncountered : public VacuumError {
 public:
  using VacuumError::VacuumError;
};

}  // namespace tvdlab
