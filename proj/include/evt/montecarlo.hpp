#pragma once

#include <cstdint>
#include <vector>

#include "evt/distributions.hpp"
#include "evt/max_stable.hpp"
#include "evt/norming.hpp"

namespace evt {

struct SimulationPlan {
  UnivariateDistribution parent;
  NormingSequence norming;
  std::uint64_t n = 1;  // block size
  std::uint64_t k = 1;  // extreme rank
  std::uint64_t replications = 1;
  std::uint64_t seed = 20240101;
};

/// Mean and standard error with Neumaier-compensated sums.
struct SampleSummary {
  double mean = 0.0;
  double std_error = 0.0;
  std::uint64_t count = 0;
};

[[nodiscard]] SampleSummary summarize(const std::vector<double>& values);

/// `replications` draws of (X_{n-k+1:n} - b_n) / a_n. The k largest of n
/// uniforms are generated through their survival values,
///   s_{j+1} = s_j + (1 - s_j) (1 - V^{1/(n-j)}),
/// so each draw costs O(k), never O(n). Replication r uses
/// Xoshiro256::stream(seed, r).
[[nodiscard]] std::vector<double> sample_normalized_extreme(const SimulationPlan& plan);

struct Lemma2Row {
  std::uint64_t n;
  double empirical_mean;
  double std_error;
  double exact_mean;  // H_n - log n
  double limit;       // Euler's gamma
};

/// E(Z_n - log n) for Z_n the maximum of n standard exponentials.
[[nodiscard]] std::vector<Lemma2Row> check_lemma2(const std::vector<std::uint64_t>& n_grid,
                                                  std::uint64_t replications, std::uint64_t seed);

struct ResubEstimate {
  double value = 0.0;
  double std_error = 0.0;
  /// Draws where the density evaluated to zero; they are left out.
  std::uint64_t excluded = 0;
};

/// -(1/m) sum log g_{k:n}(X_i) over simulated X_i.
[[nodiscard]] ResubEstimate resub_entropy(const SimulationPlan& plan);

struct MomentRow {
  std::uint64_t n;
  double empirical_moment;
  double std_error;
  double limit_moment;
};

/// Empirical E[((X_{n:n} - b_n)/a_n)^k_power] against the max-stable limit
/// moment. Throws DomainError when k_power >= alpha for a Frechet target.
[[nodiscard]] std::vector<MomentRow> check_moment_convergence(const UnivariateDistribution& parent,
                                                              const NormingSequence& norming,
                                                              const MaxStableLaw& family, int k_power,
                                                              const std::vector<std::uint64_t>& n_grid,
                                                              std::uint64_t replications, std::uint64_t seed);

}  // namespace evt
