#pragma once

#include <cstdint>
#include <string>

namespace evt {

enum class Family { Frechet, Weibull, Gumbel };

[[nodiscard]] std::string to_string(Family f);

/// One of the three max-stable laws: Frechet(alpha), Weibull(alpha), Gumbel.
/// The Weibull law here is the max-stable one, supported on (-inf, 0].
class MaxStableLaw {
 public:
  [[nodiscard]] static MaxStableLaw frechet(double alpha);
  [[nodiscard]] static MaxStableLaw weibull(double alpha);
  [[nodiscard]] static MaxStableLaw gumbel();

  [[nodiscard]] Family family() const noexcept { return family_; }
  /// Shape parameter; 1 for Gumbel (unused).
  [[nodiscard]] double alpha() const noexcept { return alpha_; }
  [[nodiscard]] double left_end() const noexcept;
  [[nodiscard]] double right_end() const noexcept;
  [[nodiscard]] std::string label() const;

  friend bool operator==(const MaxStableLaw&, const MaxStableLaw&) = default;

 private:
  MaxStableLaw(Family f, double alpha) : family_(f), alpha_(alpha) {}
  Family family_;
  double alpha_;
};

/// Limit law K_k of the normalized k-th upper extreme; k = 1 is the law itself.
struct KthExtremeLimit {
  MaxStableLaw law;
  std::uint64_t k = 1;

  KthExtremeLimit(MaxStableLaw l, std::uint64_t rank);
};

[[nodiscard]] double cdf(const MaxStableLaw& law, double x);
[[nodiscard]] double pdf(const MaxStableLaw& law, double x);
[[nodiscard]] double log_pdf(const MaxStableLaw& law, double x);
/// -log G(x); +inf where G vanishes, 0 where G = 1.
[[nodiscard]] double neg_log_cdf(const MaxStableLaw& law, double x);
[[nodiscard]] double quantile(const MaxStableLaw& law, double p);
/// Closed-form Shannon entropy.
[[nodiscard]] double entropy(const MaxStableLaw& law);

[[nodiscard]] double kth_cdf(const KthExtremeLimit& lim, double x);
[[nodiscard]] double kth_pdf(const KthExtremeLimit& lim, double x);
[[nodiscard]] double kth_log_pdf(const KthExtremeLimit& lim, double x);
[[nodiscard]] double kth_quantile(const KthExtremeLimit& lim, double p);
/// Closed-form entropy of K_k.
[[nodiscard]] double kth_entropy(const KthExtremeLimit& lim);

/// E[Y^power] for Y ~ law: Gamma(1 - power/alpha) for Frechet (power < alpha),
/// (-1)^power Gamma(1 + power/alpha) for Weibull, (-1)^power Gamma^{(power)}(1)
/// for Gumbel (power <= 2).
[[nodiscard]] double limit_moment(const MaxStableLaw& law, int power);

}  // namespace evt
