#pragma once

#include <stdexcept>

namespace stepwave {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Argument outside the domain of an operation (t <= 0, |y| < 1, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Operation needs the other energy regime (above vs below the step).
class RegimeError : public Error {
 public:
  using Error::Error;
};

/// E0 == V0: both solution branches degenerate.
class DegenerateScenarioError : public Error {
 public:
  using Error::Error;
};

/// A root, extremum or linear solve could not be completed.
class NumericalError : public Error {
 public:
  using Error::Error;
};

class PreflightError : public Error {
 public:
  using Error::Error;
};

class ContourError : public Error {
 public:
  using Error::Error;
};

}  // namespace stepwave
