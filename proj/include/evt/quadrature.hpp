#pragma once

#include <cstddef>
#include <functional>
#include <span>

namespace evt {

/// Tolerances and truncation rule for integrals over (possibly infinite)
/// supports.
struct QuadratureSpec {
  double abs_tol = 1e-12;
  double rel_tol = 1e-12;
  std::size_t max_subdivisions = 4000;
  /// Probability mass allowed outside the truncated integration window.
  double tail_cut = 1e-10;

  /// Throws DomainError when a field is out of range.
  void validate() const;
};

struct QuadratureResult {
  double value = 0.0;
  double abs_error = 0.0;
  std::size_t evaluations = 0;
  std::size_t intervals = 0;
  bool converged = false;
};

using Integrand = std::function<double(double)>;

/// Globally adaptive 21-point Gauss-Kronrod quadrature over the consecutive
/// pieces [breaks[i], breaks[i+1]]. Infinite outer endpoints are handled by
/// the substitution x = a + t/(1-t). Never throws on non-convergence; check
/// `converged`.
[[nodiscard]] QuadratureResult integrate_adaptive(const Integrand& f, std::span<const double> breaks,
                                                  const QuadratureSpec& spec);

[[nodiscard]] QuadratureResult integrate_adaptive(const Integrand& f, double a, double b,
                                                  const QuadratureSpec& spec);

/// As integrate_adaptive, but throws NumericalError (carrying the partial
/// estimate) when the tolerance is not met.
[[nodiscard]] double integrate(const Integrand& f, std::span<const double> breaks, const QuadratureSpec& spec);
[[nodiscard]] double integrate(const Integrand& f, double a, double b, const QuadratureSpec& spec);

}  // namespace evt
