#pragma once

#include <cstdint>
#include <vector>

#include "evt/finite_sample.hpp"
#include "evt/max_stable.hpp"
#include "evt/quadrature.hpp"

namespace evt {

/// Integration window and breakpoints for a finite-sample law: its support
/// truncated at the tail_cut/2 and 1 - tail_cut/2 quantiles, split at a
/// ladder of interior quantiles.
[[nodiscard]] std::vector<double> integration_breaks(const FiniteSampleLaw& law, const QuadratureSpec& spec);

/// H(g) = -int g log g.
[[nodiscard]] double entropy_of(const FiniteSampleLaw& law, const QuadratureSpec& spec = {});

/// I1(n) = -(n - 1)/n.
[[nodiscard]] double i1_exact(std::uint64_t n);

/// I2(n) = int g_n(x) log(n a_n f(a_n x + b_n)) dx; maxima only (k = 1).
[[nodiscard]] double i2_of(const FiniteSampleLaw& law, const QuadratureSpec& spec = {});

/// Delta_g(g_{k:n}) = -int g_{k:n}(x) log g(x) dx against the limit density g.
/// Throws DomainError when the law's support is not inside the limit's.
[[nodiscard]] double delta_of(const FiniteSampleLaw& law, const KthExtremeLimit& limit,
                              const QuadratureSpec& spec = {});

/// D(g_{k:n} || g) = Delta_g - H, integrated as one integrand g (log g_{k:n} - log g)
/// and clamped at 0 when it falls below zero by less than the quadrature tolerance.
[[nodiscard]] double kl_of(const FiniteSampleLaw& law, const KthExtremeLimit& limit,
                           const QuadratureSpec& spec = {});

struct ConvergenceReport {
  std::vector<std::uint64_t> grid;
  std::vector<double> entropy_values;
  std::vector<double> delta_values;
  std::vector<double> kl_values;
  double limit_entropy = 0.0;
  std::vector<double> gaps;
  bool monotone_increasing = false;
};

/// H, Delta and D over n_grid against the closed-form limit entropy. Grid
/// points are evaluated in parallel; results do not depend on scheduling.
[[nodiscard]] ConvergenceReport convergence_sweep(const UnivariateDistribution& parent, const NormingSequence& norming,
                                                  const MaxStableLaw& limit, const std::vector<std::uint64_t>& n_grid,
                                                  std::uint64_t k, const QuadratureSpec& spec = {});

/// -int K'_k log K'_k by quadrature over the limit law's support, truncated
/// at its tail_cut quantiles. Independent of the closed form kth_entropy.
[[nodiscard]] double limit_entropy_by_quadrature(const KthExtremeLimit& limit, const QuadratureSpec& spec = {});

/// True when every step of `values` rises by more than -slack.
[[nodiscard]] bool is_monotone_increasing(const std::vector<double>& values, double slack);

}  // namespace evt
