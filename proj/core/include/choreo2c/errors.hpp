#pragma once

#include <stdexcept>

namespace choreo2c {

/// An argument lies outside the documented domain of an operation.
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A sampled configuration fell below the collision floor; the path is not
/// admissible (the potential would diverge there).
class CollisionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An iterative solver exhausted its budget before reaching tolerance.
class ConvergenceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A line search could not find any admissible decreasing step.
class StalledError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Sampled data does not span enough dimensions for the requested fit.
class DegenerateError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace choreo2c
