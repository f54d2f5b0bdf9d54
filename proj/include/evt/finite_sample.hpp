#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "evt/distributions.hpp"
#include "evt/norming.hpp"

namespace evt {

/// Exact law of the normalized k-th upper extreme (X_{n-k+1:n} - b_n) / a_n
/// of n iid draws from `parent`. k = 1 is the normalized maximum.
class FiniteSampleLaw {
 public:
  /// Throws DomainError unless 1 <= k <= n.
  FiniteSampleLaw(UnivariateDistribution parent, const NormingSequence& norming, std::uint64_t n,
                  std::uint64_t k = 1);

  [[nodiscard]] const UnivariateDistribution& parent() const noexcept { return parent_; }
  [[nodiscard]] std::uint64_t n() const noexcept { return n_; }
  [[nodiscard]] std::uint64_t k() const noexcept { return k_; }
  [[nodiscard]] double scale() const noexcept { return a_; }
  [[nodiscard]] double center() const noexcept { return b_; }

  /// Parent-scale point a_n x + b_n.
  [[nodiscard]] double parent_point(double x) const noexcept { return a_ * x + b_; }

  [[nodiscard]] double density(double x) const;
  [[nodiscard]] double log_density(double x) const;
  [[nodiscard]] double cdf(double x) const;
  /// 1 - cdf, accurate in the upper tail.
  [[nodiscard]] double sf(double x) const;
  /// ((l(F) - b_n)/a_n, (r(F) - b_n)/a_n)
  [[nodiscard]] std::pair<double, double> support() const;
  /// Inverse of cdf by bracketing root finding.
  [[nodiscard]] double quantile(double p) const;

  /// log(n a_n f(a_n x + b_n)); the per-point factor of the I2 integrand.
  [[nodiscard]] double log_scaled_parent_density(double x) const;

 private:
  UnivariateDistribution parent_;
  std::uint64_t n_;
  std::uint64_t k_;
  double a_;
  double b_;
  double log_a_;
  // log [ n! / ((k-1)! (n-k)!) ]
  double log_coeff_;
};

/// True when g_n(x) <= g_{n-1}(x) (relative slack `rel_slack`) for every n in
/// [n_lo, n_hi] and every x in `xs` where g_{n-1}(x) > 0.
[[nodiscard]] bool density_nonincreasing_in_n(const UnivariateDistribution& parent, const NormingSequence& norming,
                                              std::uint64_t n_lo, std::uint64_t n_hi, const std::vector<double>& xs,
                                              double rel_slack = 1e-12);

}  // namespace evt
