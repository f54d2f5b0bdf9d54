#include "evt/classify.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "evt/errors.hpp"
#include "evt/max_stable.hpp"

namespace evt {
namespace {

double hazard(const UnivariateDistribution& F, double x) { return std::exp(F.log_pdf(x) - F.log_sf(x)); }

void check_probes(const std::vector<double>& probes) {
  for (double p : probes) {
    if (!(p > 0.0 && p < 1.0)) throw DomainError("von Mises probes must lie in (0, 1)");
  }
}

std::vector<std::pair<double, double>> trace(const std::vector<double>& probes, const std::vector<double>& ratios) {
  std::vector<std::pair<double, double>> out;
  for (std::size_t i = 0; i < probes.size(); ++i) out.emplace_back(probes[i], ratios[i]);
  return out;
}

bool settled(const RatioLimit& lim) {
  return std::isfinite(lim.estimate) && lim.relative_spread <= kStabilityThreshold;
}

}  // namespace

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::Frechet:
      return "Frechet";
    case Verdict::Weibull:
      return "Weibull";
    case Verdict::Gumbel:
      return "Gumbel";
    case Verdict::Inconclusive:
      return "inconclusive";
  }
  return "?";
}

std::vector<double> von_mises_frechet(const UnivariateDistribution& F, const std::vector<double>& probes) {
  if (std::isfinite(F.right_end())) throw DomainError("von_mises_frechet: needs r(F) = +inf");
  check_probes(probes);
  std::vector<double> out;
  for (double p : probes) {
    const double x = F.isf(1.0 - p);
    out.push_back(x * hazard(F, x));
  }
  return out;
}

std::vector<double> von_mises_weibull(const UnivariateDistribution& F, const std::vector<double>& probes) {
  if (!std::isfinite(F.right_end())) throw DomainError("von_mises_weibull: needs r(F) < inf");
  check_probes(probes);
  std::vector<double> out;
  for (double p : probes) {
    const double x = F.isf(1.0 - p);
    out.push_back((F.right_end() - x) * hazard(F, x));
  }
  return out;
}

std::vector<double> von_mises_gumbel(const UnivariateDistribution& F, const std::vector<double>& probes) {
  check_probes(probes);
  std::vector<double> out;
  for (double p : probes) {
    const double x = F.isf(1.0 - p);
    // f(x) * u(x) / (1 - F(x))
    out.push_back(hazard(F, x) * auxiliary_function(F, x));
  }
  return out;
}

std::vector<double> default_probe_ladder() {
  std::vector<double> probes;
  for (int j = 1; j <= 8; ++j) probes.push_back(1.0 - std::pow(10.0, -j));
  return probes;
}

RatioLimit extrapolate_ratio(const std::vector<double>& probes, const std::vector<double>& ratios) {
  if (probes.size() != ratios.size() || probes.size() < 4) {
    throw DomainError("extrapolate_ratio: need at least four probes");
  }
  const std::size_t m = probes.size();
  auto summarize = [](const std::vector<double>& values) {
    const auto [lo, hi] = std::minmax_element(values.begin(), values.end());
    double mean = 0.0;
    for (double v : values) mean += v;
    mean /= static_cast<double>(values.size());
    const double spread = mean != 0.0 ? (*hi - *lo) / std::abs(mean) : std::abs(*hi - *lo);
    return RatioLimit{mean, std::isfinite(spread) ? spread : HUGE_VAL};
  };

  // Logarithmic error model r = L + c tau, eliminated between neighbours.
  std::vector<double> log_model;
  for (std::size_t i = m - 3; i < m; ++i) {
    const double t0 = 1.0 / -std::log1p(-probes[i - 1]);
    const double t1 = 1.0 / -std::log1p(-probes[i]);
    log_model.push_back((t0 * ratios[i] - t1 * ratios[i - 1]) / (t0 - t1));
  }
  // Geometric error model r = L + c q^j (Aitken delta-squared on triples).
  std::vector<double> geometric_model;
  for (std::size_t i = m - 2; i < m; ++i) {
    const double d1 = ratios[i] - ratios[i - 1];
    const double d0 = ratios[i - 1] - ratios[i - 2];
    const double denom = d1 - d0;
    const double scale = std::max({std::abs(ratios[i]), std::abs(d1), std::abs(d0)});
    if (std::abs(denom) <= 1e-12 * scale || d1 * d0 <= 0.0) {
      geometric_model.push_back(ratios[i]);
    } else {
      geometric_model.push_back(ratios[i] - d1 * d1 / denom);
    }
  }
  const RatioLimit a = summarize(log_model);
  const RatioLimit b = summarize(geometric_model);
  return a.relative_spread <= b.relative_spread ? a : b;
}

DomainVerdict classify(const UnivariateDistribution& F) {
  const std::vector<double> probes = default_probe_ladder();
  DomainVerdict verdict;
  std::ostringstream note;

  auto try_power_ratio = [&](Verdict family, const std::vector<double>& ratios) {
    verdict.ratio_trace = trace(probes, ratios);
    const RatioLimit lim = extrapolate_ratio(probes, ratios);
    note << to_string(family) << " ratio -> " << lim.estimate << " (spread " << lim.relative_spread << "); ";
    if (settled(lim) && lim.estimate > 0.0) {
      verdict.family = family;
      verdict.alpha_estimate = lim.estimate;
      return true;
    }
    return false;
  };

  try {
    const bool decided = std::isfinite(F.right_end()) ? try_power_ratio(Verdict::Weibull, von_mises_weibull(F, probes))
                                                      : try_power_ratio(Verdict::Frechet, von_mises_frechet(F, probes));
    if (decided) {
      verdict.confidence_note = note.str() + "ratio settled within the stability threshold";
      return verdict;
    }
    try {
      const std::vector<double> ratios = von_mises_gumbel(F, probes);
      const RatioLimit lim = extrapolate_ratio(probes, ratios);
      note << "Gumbel ratio -> " << lim.estimate << " (spread " << lim.relative_spread << "); ";
      verdict.ratio_trace = trace(probes, ratios);
      if (settled(lim) && std::abs(lim.estimate - 1.0) <= kStabilityThreshold) {
        verdict.family = Verdict::Gumbel;
        verdict.confidence_note = note.str() + "ratio settled at 1";
        return verdict;
      }
    } catch (const DomainError&) {
      note << "Gumbel ratio undefined (mean excess diverges); ";
    }
  } catch (const NumericalError& e) {
    note << "evaluation failed: " << e.what() << "; ";
  }
  verdict.family = Verdict::Inconclusive;
  verdict.confidence_note = note.str() + "no ratio settled";
  return verdict;
}

std::vector<TailEquivalencePoint> tail_equivalence(const UnivariateDistribution& F, const NormingSequence& norming,
                                                   std::uint64_t n, const std::vector<double>& xs) {
  const double a = norming.scale(n);
  const double b = norming.center(n);
  const double dn = static_cast<double>(n);
  std::vector<TailEquivalencePoint> out;
  for (double x : xs) {
    out.push_back({x, dn * F.sf(a * x + b), neg_log_cdf(norming.target(), x)});
  }
  return out;
}

}  // namespace evt
