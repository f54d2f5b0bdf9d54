#include "evt/distributions.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <string>
#include <utility>

#include "evt/errors.hpp"
#include "evt/roots.hpp"

namespace evt {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

void check_probability(double p, const char* who) {
  if (!(p >= 0.0 && p <= 1.0)) {
    throw DomainError(std::string(who) + ": probability outside [0, 1]");
  }
}

}  // namespace

UnivariateDistribution::UnivariateDistribution(DistributionEvaluators ev) : ev_(std::move(ev)) {
  if (!ev_.cdf || !ev_.pdf) {
    throw DomainError("UnivariateDistribution: cdf and pdf evaluators are required");
  }
  if (!(ev_.left_end < ev_.right_end)) {
    throw DomainError("UnivariateDistribution: left end must lie below right end");
  }
}

double UnivariateDistribution::cdf(double x) const {
  if (x <= left_end()) return 0.0;
  if (x >= right_end()) return 1.0;
  return ev_.cdf(x);
}

double UnivariateDistribution::sf(double x) const {
  if (x <= left_end()) return 1.0;
  if (x >= right_end()) return 0.0;
  return ev_.sf ? ev_.sf(x) : 1.0 - ev_.cdf(x);
}

double UnivariateDistribution::pdf(double x) const {
  if (!in_support(x)) return 0.0;
  return ev_.pdf(x);
}

double UnivariateDistribution::log_pdf(double x) const {
  if (!in_support(x)) return -kInf;
  return ev_.log_pdf ? ev_.log_pdf(x) : std::log(ev_.pdf(x));
}

double UnivariateDistribution::log_cdf(double x) const {
  if (x <= left_end()) return -kInf;
  if (x >= right_end()) return 0.0;
  const double s = sf(x);
  if (s < 0.5) {
    return std::log1p(-s);
  }
  return std::log(ev_.cdf(x));
}

double UnivariateDistribution::log_sf(double x) const {
  if (x <= left_end()) return 0.0;
  if (x >= right_end()) return -kInf;
  const double c = ev_.cdf(x);
  if (c < 0.5) {
    return std::log1p(-c);
  }
  return std::log(sf(x));
}

double UnivariateDistribution::quantile(double p) const {
  check_probability(p, "quantile");
  if (p == 0.0 || p == 1.0) {
    const double end = p == 0.0 ? left_end() : right_end();
    if (std::isinf(end)) {
      throw DomainError("quantile: infinite endpoint at p = " + std::to_string(p));
    }
    return end;
  }
  if (ev_.quantile) return ev_.quantile(p);
  if (p > 0.5) return isf(1.0 - p);
  return invert_distribution(*this, p, false);
}

double UnivariateDistribution::isf(double s) const {
  check_probability(s, "isf");
  if (s == 0.0 || s == 1.0) {
    const double end = s == 1.0 ? left_end() : right_end();
    if (std::isinf(end)) {
      throw DomainError("isf: infinite endpoint at s = " + std::to_string(s));
    }
    return end;
  }
  if (ev_.isf) return ev_.isf(s);
  if (ev_.quantile && s >= 0.5) return ev_.quantile(1.0 - s);
  return invert_distribution(*this, s, true);
}

double invert_distribution(const UnivariateDistribution& d, double p, bool upper_tail) {
  // Solve in log space so deep-tail targets keep their relative accuracy.
  const double target = std::log(p);
  std::function<double(double)> f;
  std::function<double(double)> df;
  if (upper_tail) {
    f = [&](double x) { return target - d.log_sf(x); };
    df = [&](double x) { return std::exp(d.log_pdf(x) - d.log_sf(x)); };
  } else {
    f = [&](double x) { return d.log_cdf(x) - target; };
    df = [&](double x) { return std::exp(d.log_pdf(x) - d.log_cdf(x)); };
  }
  const Bracket b = expand_bracket(f, d.left_end(), d.right_end());
  return solve_monotone(f, df, b, 1e-14);
}

UnivariateDistribution make_pareto(double alpha) {
  if (!(alpha > 0.0)) {
    throw DomainError("make_pareto: alpha must be positive");
  }
  DistributionEvaluators ev;
  ev.name = "pareto(" + std::to_string(alpha) + ")";
  ev.left_end = 1.0;
  ev.right_end = kInf;
  ev.cdf = [alpha](double x) { return -std::expm1(-alpha * std::log(x)); };
  ev.sf = [alpha](double x) { return std::pow(x, -alpha); };
  ev.pdf = [alpha](double x) { return alpha * std::pow(x, -(alpha + 1.0)); };
  ev.log_pdf = [alpha](double x) { return std::log(alpha) - (alpha + 1.0) * std::log(x); };
  ev.quantile = [alpha](double p) { return std::exp(-std::log1p(-p) / alpha); };
  ev.isf = [alpha](double s) { return std::pow(s, -1.0 / alpha); };
  return UnivariateDistribution(std::move(ev));
}

UnivariateDistribution make_uniform01() {
  DistributionEvaluators ev;
  ev.name = "uniform01";
  ev.left_end = 0.0;
  ev.right_end = 1.0;
  ev.cdf = [](double x) { return x; };
  ev.sf = [](double x) { return 1.0 - x; };
  ev.pdf = [](double) { return 1.0; };
  ev.log_pdf = [](double) { return 0.0; };
  ev.quantile = [](double p) { return p; };
  ev.isf = [](double s) { return 1.0 - s; };
  return UnivariateDistribution(std::move(ev));
}

UnivariateDistribution make_exponential() {
  DistributionEvaluators ev;
  ev.name = "exponential";
  ev.left_end = 0.0;
  ev.right_end = kInf;
  ev.cdf = [](double x) { return -std::expm1(-x); };
  ev.sf = [](double x) { return std::exp(-x); };
  ev.pdf = [](double x) { return std::exp(-x); };
  ev.log_pdf = [](double x) { return -x; };
  ev.quantile = [](double p) { return -std::log1p(-p); };
  ev.isf = [](double s) { return -std::log(s); };
  return UnivariateDistribution(std::move(ev));
}

namespace {

double normal_cdf(double x) { return 0.5 * std::erfc(-x / std::numbers::sqrt2); }
double normal_sf(double x) { return 0.5 * std::erfc(x / std::numbers::sqrt2); }
double normal_log_pdf(double x) { return -0.5 * x * x - 0.5 * std::log(2.0 * std::numbers::pi); }

// x with sf(x) = s for s <= 0.5, by Newton on log sf inside a safeguarding bracket.
double normal_upper_quantile(double s) {
  auto f = [s](double x) { return std::log(s) - std::log(normal_sf(x)); };
  auto df = [](double x) { return std::exp(normal_log_pdf(x)) / normal_sf(x); };
  // sf(40) is ~1e-350, below the smallest subnormal.
  return solve_monotone(f, df, Bracket{0.0, 38.5}, 1e-15);
}

}  // namespace

UnivariateDistribution make_std_normal() {
  DistributionEvaluators ev;
  ev.name = "std_normal";
  ev.cdf = normal_cdf;
  ev.sf = normal_sf;
  ev.pdf = [](double x) { return std::exp(normal_log_pdf(x)); };
  ev.log_pdf = normal_log_pdf;
  ev.isf = [](double s) { return s <= 0.5 ? normal_upper_quantile(s) : -normal_upper_quantile(1.0 - s); };
  ev.quantile = [](double p) { return p >= 0.5 ? normal_upper_quantile(1.0 - p) : -normal_upper_quantile(p); };
  return UnivariateDistribution(std::move(ev));
}

UnivariateDistribution LocationScale::distribution() const { return location_scale(base, location, scale); }

UnivariateDistribution location_scale(const UnivariateDistribution& base, double location, double scale) {
  if (!(scale > 0.0) || !std::isfinite(location)) {
    throw DomainError("location_scale: scale must be positive and location finite");
  }
  DistributionEvaluators ev;
  ev.name = base.name() + "*" + std::to_string(scale) + "+" + std::to_string(location);
  ev.left_end = location + scale * base.left_end();
  ev.right_end = location + scale * base.right_end();
  const double log_scale = std::log(scale);
  auto z = [location, scale](double x) { return (x - location) / scale; };
  ev.cdf = [base, z](double x) { return base.cdf(z(x)); };
  ev.sf = [base, z](double x) { return base.sf(z(x)); };
  ev.pdf = [base, z, scale](double x) { return base.pdf(z(x)) / scale; };
  ev.log_pdf = [base, z, log_scale](double x) { return base.log_pdf(z(x)) - log_scale; };
  ev.quantile = [base, location, scale](double p) { return location + scale * base.quantile(p); };
  ev.isf = [base, location, scale](double s) { return location + scale * base.isf(s); };
  return UnivariateDistribution(std::move(ev));
}

}  // namespace evt
