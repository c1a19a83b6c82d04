#pragma once

#include <stdexcept>
#include <string>

namespace scatter1d {

// Non-finite or out-of-domain arguments.
class DomainError : public std::domain_error {
public:
  using std::domain_error::domain_error;
};

// The requested accuracy cannot be delivered at the given argument.
class AccuracyError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// An iterative method (bracketing, Newton) failed to converge.
class ConvergenceError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// Adaptive integration failed; position() is where the step size collapsed.
class IntegrationError : public std::runtime_error {
public:
  IntegrationError(const std::string& what, double x)
      : std::runtime_error(what), x_(x) {}
  double position() const noexcept { return x_; }

private:
  double x_;
};

// |M22| (or the closed-form T denominator) is below the singularity threshold.
class SpectralSingularityError : public std::runtime_error {
public:
  SpectralSingularityError(const std::string& what, double modulus)
      : std::runtime_error(what), modulus_(modulus) {}
  double modulus() const noexcept { return modulus_; }

private:
  double modulus_;
};

// A formula hit its excluded case (vanishing denominator).
class DegenerateError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// An equation provably or observably has no admissible solution.
class NoSolutionError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

}  // namespace scatter1d
