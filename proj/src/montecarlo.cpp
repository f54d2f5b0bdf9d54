#include "evt/montecarlo.hpp"

#include <cmath>

#include "evt/errors.hpp"
#include "evt/finite_sample.hpp"
#include "evt/parallel.hpp"
#include "evt/random.hpp"
#include "evt/special_functions.hpp"

namespace evt {
namespace {

// Replications are processed in fixed-size chunks so that scheduling never
// changes which stream produces which value.
constexpr std::size_t kChunk = 4096;

template <typename PerDraw>
void for_each_replication(std::uint64_t replications, const PerDraw& per_draw) {
  const std::size_t chunks = static_cast<std::size_t>((replications + kChunk - 1) / kChunk);
  parallel_for(chunks, [&](std::size_t c) {
    const std::uint64_t begin = static_cast<std::uint64_t>(c) * kChunk;
    const std::uint64_t end = std::min<std::uint64_t>(replications, begin + kChunk);
    for (std::uint64_t r = begin; r < end; ++r) per_draw(r);
  });
}

}  // namespace

SampleSummary summarize(const std::vector<double>& values) {
  SampleSummary out;
  out.count = values.size();
  if (values.empty()) return out;
  double sum = 0.0;
  double comp = 0.0;
  for (double v : values) {
    const double t = sum + v;
    comp += std::abs(sum) >= std::abs(v) ? (sum - t) + v : (v - t) + sum;
    sum = t;
  }
  const double m = static_cast<double>(values.size());
  out.mean = (sum + comp) / m;
  if (values.size() > 1) {
    double ss = 0.0;
    double c2 = 0.0;
    for (double v : values) {
      const double d = (v - out.mean) * (v - out.mean);
      const double t = ss + d;
      c2 += ss >= d ? (ss - t) + d : (d - t) + ss;
      ss = t;
    }
    out.std_error = std::sqrt((ss + c2) / (m - 1.0) / m);
  }
  return out;
}

std::vector<double> sample_normalized_extreme(const SimulationPlan& plan) {
  if (plan.k == 0 || plan.k > plan.n) throw DomainError("sample_normalized_extreme: need 1 <= k <= n");
  if (plan.replications == 0) throw DomainError("sample_normalized_extreme: replications must be >= 1");
  const double a = plan.norming.scale(plan.n);
  const double b = plan.norming.center(plan.n);
  std::vector<double> out(plan.replications);
  for_each_replication(plan.replications, [&](std::uint64_t r) {
    Xoshiro256 rng = Xoshiro256::stream(plan.seed, r);
    double s = 0.0;
    for (std::uint64_t j = 0; j < plan.k; ++j) {
      const double remaining = static_cast<double>(plan.n - j);
      const double gap = -std::expm1(std::log(rng.uniform_open()) / remaining);
      s += (1.0 - s) * gap;
    }
    out[r] = (plan.parent.isf(s) - b) / a;
  });
  return out;
}

std::vector<Lemma2Row> check_lemma2(const std::vector<std::uint64_t>& n_grid, std::uint64_t replications,
                                    std::uint64_t seed) {
  const ParentSpec spec = ParentSpec::exponential();
  const NormingSequence norming = closed_form_norming(spec);
  std::vector<Lemma2Row> rows;
  for (std::uint64_t n : n_grid) {
    const SimulationPlan plan{spec.distribution(), norming, n, 1, replications, seed};
    const SampleSummary s = summarize(sample_normalized_extreme(plan));
    rows.push_back({n, s.mean, s.std_error, harmonic(n) - std::log(static_cast<double>(n)),
                    SpecialConstants::euler_gamma});
  }
  return rows;
}

ResubEstimate resub_entropy(const SimulationPlan& plan) {
  const std::vector<double> draws = sample_normalized_extreme(plan);
  const FiniteSampleLaw law(plan.parent, plan.norming, plan.n, plan.k);
  std::vector<double> neg_log;
  neg_log.reserve(draws.size());
  ResubEstimate out;
  for (double x : draws) {
    const double lg = law.log_density(x);
    if (!std::isfinite(lg)) {
      ++out.excluded;
      continue;
    }
    neg_log.push_back(-lg);
  }
  const SampleSummary s = summarize(neg_log);
  out.value = s.mean;
  out.std_error = s.std_error;
  return out;
}

std::vector<MomentRow> check_moment_convergence(const UnivariateDistribution& parent, const NormingSequence& norming,
                                                const MaxStableLaw& family, int k_power,
                                                const std::vector<std::uint64_t>& n_grid,
                                                std::uint64_t replications, std::uint64_t seed) {
  const double limit = limit_moment(family, k_power);
  std::vector<MomentRow> rows;
  for (std::uint64_t n : n_grid) {
    const SimulationPlan plan{parent, norming, n, 1, replications, seed};
    std::vector<double> draws = sample_normalized_extreme(plan);
    for (double& x : draws) x = std::pow(x, k_power);
    const SampleSummary s = summarize(draws);
    rows.push_back({n, s.mean, s.std_error, limit});
  }
  return rows;
}

}  // namespace evt
