#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "evt/distributions.hpp"
#include "evt/norming.hpp"

namespace evt {

enum class Verdict { Frechet, Weibull, Gumbel, Inconclusive };

[[nodiscard]] std::string to_string(Verdict v);

struct DomainVerdict {
  Verdict family = Verdict::Inconclusive;
  /// Present iff family is Frechet or Weibull.
  std::optional<double> alpha_estimate;
  /// (probe probability, ratio) for the ratio that decided the verdict, or
  /// the last one tried when inconclusive.
  std::vector<std::pair<double, double>> ratio_trace;
  std::string confidence_note;
};

/// x f(x) / (1 - F(x)) at x = F^{-1}(p). Needs r(F) = +inf.
[[nodiscard]] std::vector<double> von_mises_frechet(const UnivariateDistribution& F, const std::vector<double>& probes);

/// (r(F) - x) f(x) / (1 - F(x)) at x = F^{-1}(p). Needs r(F) < inf.
[[nodiscard]] std::vector<double> von_mises_weibull(const UnivariateDistribution& F, const std::vector<double>& probes);

/// f(x) int_x^{r(F)} (1 - F(t)) dt / (1 - F(x))^2 at x = F^{-1}(p). Throws
/// DomainError when the mean-excess integral diverges.
[[nodiscard]] std::vector<double> von_mises_gumbel(const UnivariateDistribution& F, const std::vector<double>& probes);

/// Default probe ladder 1 - 10^{-j}, j = 1..8.
[[nodiscard]] std::vector<double> default_probe_ladder();

/// Limit of a ratio sequence from its last four probes. Two error models are
/// tried: r = L + c tau with tau = 1/log(1/(1-p)) (pairwise Richardson) and
/// r = L + c q^j (Aitken delta-squared); the one whose extrapolated values
/// agree best is reported.
struct RatioLimit {
  double estimate;
  /// (max - min) / |mean| of the extrapolated values.
  double relative_spread;
};
[[nodiscard]] RatioLimit extrapolate_ratio(const std::vector<double>& probes, const std::vector<double>& ratios);

/// Relative spread at or below which an extrapolated ratio counts as settled.
inline constexpr double kStabilityThreshold = 0.02;

/// Max-domain-of-attraction diagnosis from the von Mises ratios.
[[nodiscard]] DomainVerdict classify(const UnivariateDistribution& F);

struct TailEquivalencePoint {
  double x;
  double scaled_tail;   // n (1 - F(a_n x + b_n))
  double limit_value;   // -log G(x)
};

/// n (1 - F(a_n x + b_n)) against -log G(x) at each x.
[[nodiscard]] std::vector<TailEquivalencePoint> tail_equivalence(const UnivariateDistribution& F,
                                                                 const NormingSequence& norming, std::uint64_t n,
                                                                 const std::vector<double>& xs);

}  // namespace evt
