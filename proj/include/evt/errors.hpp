#pragma once

#include <stdexcept>
#include <string>

namespace evt {

/// Argument outside the mathematical domain of an operation.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// The requested combination of parent and target law cannot hold
/// (e.g. a Weibull target for a parent with infinite right endpoint).
class InconsistencyError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A numerical procedure failed to meet its tolerance. Carries the best
/// estimate available when it gave up.
class NumericalError : public std::runtime_error {
 public:
  NumericalError(const std::string& what, double partial_estimate, double error_estimate)
      : std::runtime_error(what), partial_(partial_estimate), error_(error_estimate) {}

  [[nodiscard]] double partial_estimate() const noexcept { return partial_; }
  [[nodiscard]] double error_estimate() const noexcept { return error_; }

 private:
  double partial_;
  double error_;
};

}  // namespace evt
