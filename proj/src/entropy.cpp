#include "evt/entropy.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>

#include "evt/errors.hpp"
#include "evt/parallel.hpp"

namespace evt {
namespace {

// Interior quantile levels used as breakpoints; the integrand changes scale
// across them, especially in heavy or far tails.
constexpr std::array<double, 15> kBreakLevels = {1e-8, 1e-6, 1e-4, 1e-3, 0.01, 0.05, 0.2,  0.5,
                                                 0.8,  0.95, 0.99, 0.999, 1 - 1e-4, 1 - 1e-6, 1 - 1e-8};

double integrate_over_law(const FiniteSampleLaw& law, const Integrand& f, const QuadratureSpec& spec,
                          const char* what) {
  const std::vector<double> breaks = integration_breaks(law, spec);
  const QuadratureResult r = integrate_adaptive(f, breaks, spec);
  if (!r.converged) {
    throw NumericalError(std::string(what) + ": quadrature did not converge", r.value, r.abs_error);
  }
  return r.value;
}

void check_support(const FiniteSampleLaw& law, const KthExtremeLimit& limit) {
  const auto [lo, hi] = law.support();
  const double llo = limit.law.left_end();
  const double lhi = limit.law.right_end();
  auto scale = [](double v) { return std::isfinite(v) ? std::abs(v) : 0.0; };
  const double slack = 1e-12 * std::max({1.0, scale(lo), scale(hi)});
  const bool lo_ok = std::isinf(llo) || (std::isfinite(lo) && lo >= llo - slack);
  const bool hi_ok = std::isinf(lhi) || (std::isfinite(hi) && hi <= lhi + slack);
  if (!lo_ok || !hi_ok) {
    throw DomainError("relative entropy undefined: support of g_{k:n} is not inside the limit's support");
  }
}

}  // namespace

std::vector<double> integration_breaks(const FiniteSampleLaw& law, const QuadratureSpec& spec) {
  spec.validate();
  const auto [s_lo, s_hi] = law.support();
  std::vector<double> breaks;
  // Finite ends are kept, but the tail_cut quantiles are always breakpoints:
  // a single wide piece holding a sliver of mass at one end can otherwise
  // fool the Gauss/Kronrod error estimate.
  const double cut_lo = law.quantile(0.5 * spec.tail_cut);
  const double cut_hi = law.quantile(1.0 - 0.5 * spec.tail_cut);
  if (std::isfinite(s_lo)) breaks.push_back(s_lo);
  breaks.push_back(cut_lo);
  for (double p : kBreakLevels) {
    if (p > 0.5 * spec.tail_cut && p < 1.0 - 0.5 * spec.tail_cut) {
      breaks.push_back(law.quantile(p));
    }
  }
  breaks.push_back(cut_hi);
  if (std::isfinite(s_hi)) breaks.push_back(s_hi);
  std::sort(breaks.begin(), breaks.end());
  breaks.erase(std::unique(breaks.begin(), breaks.end()), breaks.end());
  return breaks;
}

double entropy_of(const FiniteSampleLaw& law, const QuadratureSpec& spec) {
  auto f = [&law](double x) {
    const double lg = law.log_density(x);
    // -p log p -> 0 as p -> 0
    if (lg < -690.0) return 0.0;
    return -std::exp(lg) * lg;
  };
  return integrate_over_law(law, f, spec, "entropy_of");
}

double i1_exact(std::uint64_t n) {
  if (n == 0) throw DomainError("i1_exact: n must be >= 1");
  const double dn = static_cast<double>(n);
  return -(dn - 1.0) / dn;
}

double i2_of(const FiniteSampleLaw& law, const QuadratureSpec& spec) {
  if (law.k() != 1) throw DomainError("i2_of: the I1/I2 decomposition is defined for maxima (k = 1)");
  auto f = [&law](double x) {
    const double lg = law.log_density(x);
    if (lg < -745.0) return 0.0;
    return std::exp(lg) * law.log_scaled_parent_density(x);
  };
  return integrate_over_law(law, f, spec, "i2_of");
}

double delta_of(const FiniteSampleLaw& law, const KthExtremeLimit& limit, const QuadratureSpec& spec) {
  check_support(law, limit);
  auto f = [&](double x) {
    const double lg = law.log_density(x);
    if (lg < -745.0) return 0.0;
    return -std::exp(lg) * kth_log_pdf(limit, x);
  };
  return integrate_over_law(law, f, spec, "delta_of");
}

double kl_of(const FiniteSampleLaw& law, const KthExtremeLimit& limit, const QuadratureSpec& spec) {
  check_support(law, limit);
  auto f = [&](double x) {
    const double lg = law.log_density(x);
    if (lg < -745.0) return 0.0;
    return std::exp(lg) * (lg - kth_log_pdf(limit, x));
  };
  const double d = integrate_over_law(law, f, spec, "kl_of");
  const double tol = std::max(spec.abs_tol, 1e-9);
  return (d < 0.0 && d > -tol) ? 0.0 : d;
}

double limit_entropy_by_quadrature(const KthExtremeLimit& limit, const QuadratureSpec& spec) {
  spec.validate();
  std::vector<double> breaks{kth_quantile(limit, 0.5 * spec.tail_cut)};
  for (double p : kBreakLevels) {
    if (p > 0.5 * spec.tail_cut && p < 1.0 - 0.5 * spec.tail_cut) breaks.push_back(kth_quantile(limit, p));
  }
  breaks.push_back(kth_quantile(limit, 1.0 - 0.5 * spec.tail_cut));
  std::sort(breaks.begin(), breaks.end());
  breaks.erase(std::unique(breaks.begin(), breaks.end()), breaks.end());
  auto f = [&limit](double x) {
    const double lp = kth_log_pdf(limit, x);
    if (lp < -690.0) return 0.0;
    return -std::exp(lp) * lp;
  };
  const QuadratureResult r = integrate_adaptive(f, breaks, spec);
  if (!r.converged) {
    throw NumericalError("limit_entropy_by_quadrature: quadrature did not converge", r.value, r.abs_error);
  }
  return r.value;
}

bool is_monotone_increasing(const std::vector<double>& values, double slack) {
  for (std::size_t i = 1; i < values.size(); ++i) {
    if (!(values[i] - values[i - 1] > -slack)) return false;
  }
  return true;
}

ConvergenceReport convergence_sweep(const UnivariateDistribution& parent, const NormingSequence& norming,
                                    const MaxStableLaw& limit, const std::vector<std::uint64_t>& n_grid,
                                    std::uint64_t k, const QuadratureSpec& spec) {
  if (n_grid.empty()) throw DomainError("convergence_sweep: empty n grid");
  for (std::size_t i = 1; i < n_grid.size(); ++i) {
    if (n_grid[i] <= n_grid[i - 1]) throw DomainError("convergence_sweep: n grid must be strictly increasing");
  }
  if (k == 0 || k > n_grid.front()) throw DomainError("convergence_sweep: need 1 <= k <= min(n_grid)");

  const KthExtremeLimit lim(limit, k);
  ConvergenceReport report;
  report.grid = n_grid;
  report.limit_entropy = kth_entropy(lim);
  const std::size_t m = n_grid.size();
  report.entropy_values.resize(m);
  report.delta_values.resize(m);
  report.kl_values.resize(m);
  report.gaps.resize(m);
  parallel_for(m, [&](std::size_t i) {
    const FiniteSampleLaw law(parent, norming, n_grid[i], k);
    report.entropy_values[i] = entropy_of(law, spec);
    report.delta_values[i] = delta_of(law, lim, spec);
    report.kl_values[i] = kl_of(law, lim, spec);
    report.gaps[i] = std::abs(report.entropy_values[i] - report.limit_entropy);
  });
  report.monotone_increasing = is_monotone_increasing(report.entropy_values, 2.0 * spec.abs_tol);
  return report;
}

}  // namespace evt
