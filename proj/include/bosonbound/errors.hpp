#pragma once

#include <stdexcept>
#include <string>

namespace bosonbound {

// Parameter outside the physical domain (N < 2, coupling <= 0, mass <= 0, ...).
// Carries the name of the offending field.
class NonPhysicalParameter : public std::invalid_argument {
public:
  NonPhysicalParameter(std::string field, const std::string& message)
      : std::invalid_argument(field + ": " + message), field_(std::move(field)) {}

  const std::string& field() const noexcept { return field_; }

private:
  std::string field_;
};

// An iterative method (root finder, bisection, minimiser, eigensolver)
// failed to reach its requested tolerance.
class ConvergenceFailure : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// Vector or matrix sizes do not match the frame they are used with.
class DimensionMismatch : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

// Argument outside the validity window of an evaluation method.
class DomainError : public std::domain_error {
public:
  using std::domain_error::domain_error;
};

// The radial grid cannot certify the requested accuracy.
class GridTooCoarse : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

}  // namespace bosonbound
