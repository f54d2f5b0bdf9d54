#pragma once

#include <cstdint>
#include <functional>
#include <string>

#include "evt/distributions.hpp"
#include "evt/max_stable.hpp"
#include "evt/quadrature.hpp"

namespace evt {

/// The worked parent families with known norming constants.
enum class ParentKind { Pareto, Uniform01, Exponential, StdNormal };

struct ParentSpec {
  ParentKind kind = ParentKind::Exponential;
  double alpha = 1.0;  // Pareto only

  [[nodiscard]] static ParentSpec pareto(double alpha) { return {ParentKind::Pareto, alpha}; }
  [[nodiscard]] static ParentSpec uniform01() { return {ParentKind::Uniform01, 1.0}; }
  [[nodiscard]] static ParentSpec exponential() { return {ParentKind::Exponential, 1.0}; }
  [[nodiscard]] static ParentSpec std_normal() { return {ParentKind::StdNormal, 1.0}; }

  /// Parses "pareto", "uniform", "exponential", "normal" (and a few aliases).
  [[nodiscard]] static ParentSpec parse(const std::string& family, double alpha = 1.0);

  [[nodiscard]] std::string label() const;
  [[nodiscard]] UnivariateDistribution distribution() const;
  /// The max-stable law the normalized maxima converge to.
  [[nodiscard]] MaxStableLaw limit() const;
};

enum class NormingProvenance { ClosedForm, QuantileRecipe };

/// n -> (a_n > 0, b_n) with the max-stable law they normalize towards.
class NormingSequence {
 public:
  using Evaluator = std::function<double(std::uint64_t)>;

  NormingSequence(Evaluator scale, Evaluator center, MaxStableLaw target, NormingProvenance provenance);

  /// a_n; throws DomainError if n == 0 or the result is not positive.
  [[nodiscard]] double scale(std::uint64_t n) const;
  /// b_n
  [[nodiscard]] double center(std::uint64_t n) const;
  [[nodiscard]] const MaxStableLaw& target() const noexcept { return target_; }
  [[nodiscard]] NormingProvenance provenance() const noexcept { return provenance_; }

 private:
  Evaluator scale_;
  Evaluator center_;
  MaxStableLaw target_;
  NormingProvenance provenance_;
};

/// Exact constants for the worked families: Pareto (n^{1/alpha}, 0),
/// uniform (1/n, 1), exponential (1, log n), normal
/// (1/sqrt(2 log n), sqrt(2 log n) - (log log n + log 4pi)/(2 sqrt(2 log n))).
/// The normal sequence is undefined at n = 1.
[[nodiscard]] NormingSequence closed_form_norming(const ParentSpec& spec);

/// Quantile-based constants: Frechet a_n = F^{-1}(1-1/n), b_n = 0;
/// Weibull a_n = r(F) - F^{-1}(1-1/n), b_n = r(F); Gumbel b_n = F^{-1}(1-1/n),
/// a_n = u(b_n).
[[nodiscard]] NormingSequence quantile_norming(const UnivariateDistribution& parent, const MaxStableLaw& target);

/// Auxiliary (mean-excess) function u(t) = int_t^{r(F)} (1 - F(s)) ds / (1 - F(t)).
/// Throws DomainError when the integral diverges numerically.
[[nodiscard]] double auxiliary_function(const UnivariateDistribution& parent, double t,
                                        const QuadratureSpec& spec = {});

}  // namespace evt
