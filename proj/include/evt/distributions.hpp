#pragma once

#include <functional>
#include <limits>
#include <string>

namespace evt {

/// Evaluators describing an absolutely continuous parent distribution F.
/// Only cdf and pdf are mandatory; missing evaluators are derived
/// (sf = 1 - cdf, log_pdf = log pdf, quantile and inverse survival by
/// safeguarded root finding on the cdf/sf).
struct DistributionEvaluators {
  std::string name;
  double left_end = -std::numeric_limits<double>::infinity();
  double right_end = std::numeric_limits<double>::infinity();
  std::function<double(double)> cdf;
  std::function<double(double)> pdf;
  std::function<double(double)> sf;
  std::function<double(double)> log_pdf;
  std::function<double(double)> quantile;
  /// Inverse survival: x with sf(x) = s. Accurate for small s.
  std::function<double(double)> isf;
};

/// A parent df F with density f on (l(F), r(F)). Immutable; copies share
/// the underlying evaluators.
class UnivariateDistribution {
 public:
  explicit UnivariateDistribution(DistributionEvaluators ev);

  [[nodiscard]] const std::string& name() const noexcept { return ev_.name; }
  [[nodiscard]] double left_end() const noexcept { return ev_.left_end; }
  [[nodiscard]] double right_end() const noexcept { return ev_.right_end; }

  [[nodiscard]] double cdf(double x) const;
  [[nodiscard]] double sf(double x) const;
  [[nodiscard]] double pdf(double x) const;
  [[nodiscard]] double log_pdf(double x) const;
  /// log F(x), accurate in both tails.
  [[nodiscard]] double log_cdf(double x) const;
  /// log(1 - F(x)), accurate in both tails.
  [[nodiscard]] double log_sf(double x) const;

  /// F^{-1}(p) for p in (0, 1); the endpoints map to l(F)/r(F) when finite
  /// and throw DomainError otherwise.
  [[nodiscard]] double quantile(double p) const;
  /// x with 1 - F(x) = s.
  [[nodiscard]] double isf(double s) const;

  [[nodiscard]] bool in_support(double x) const noexcept { return x > left_end() && x < right_end(); }

 private:
  DistributionEvaluators ev_;
};

[[nodiscard]] UnivariateDistribution make_pareto(double alpha);
[[nodiscard]] UnivariateDistribution make_uniform01();
[[nodiscard]] UnivariateDistribution make_exponential();
[[nodiscard]] UnivariateDistribution make_std_normal();

/// cdf(x) = base.cdf((x - location) / scale).
struct LocationScale {
  UnivariateDistribution base;
  double location = 0.0;
  double scale = 1.0;

  [[nodiscard]] UnivariateDistribution distribution() const;
};

[[nodiscard]] UnivariateDistribution location_scale(const UnivariateDistribution& base, double location,
                                                    double scale);

/// Generic quantile by bisection-then-Newton on the cdf (lower half) or the
/// survival function (upper half).
[[nodiscard]] double invert_distribution(const UnivariateDistribution& d, double p, bool upper_tail);

}  // namespace evt
