#include "evt/finite_sample.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "evt/errors.hpp"
#include "evt/roots.hpp"

namespace evt {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

double log_choose(double n, double i) {
  return std::lgamma(n + 1.0) - std::lgamma(i + 1.0) - std::lgamma(n - i + 1.0);
}

// log of C(n,i) Fbar^i F^(n-i); a zero power contributes nothing even when
// the matching log probability is -inf.
double log_binomial_term(double n, double i, double log_s, double log_f) {
  double v = log_choose(n, i);
  if (i > 0.0) v += i * log_s;
  if (n > i) v += (n - i) * log_f;
  return v;
}

}  // namespace

FiniteSampleLaw::FiniteSampleLaw(UnivariateDistribution parent, const NormingSequence& norming, std::uint64_t n,
                                 std::uint64_t k)
    : parent_(std::move(parent)), n_(n), k_(k) {
  if (n_ == 0 || k_ == 0 || k_ > n_) {
    throw DomainError("FiniteSampleLaw: need 1 <= k <= n");
  }
  a_ = norming.scale(n_);
  b_ = norming.center(n_);
  log_a_ = std::log(a_);
  const double dn = static_cast<double>(n_);
  const double dk = static_cast<double>(k_);
  log_coeff_ = std::lgamma(dn + 1.0) - std::lgamma(dk) - std::lgamma(dn - dk + 1.0);
}

double FiniteSampleLaw::log_density(double x) const {
  const double y = parent_point(x);
  if (!parent_.in_support(y)) return -kInf;
  const double lf = parent_.log_pdf(y);
  if (lf == -kInf) return -kInf;
  // n!/((k-1)!(n-k)!) a f(y) F(y)^{n-k} Fbar(y)^{k-1}
  double lp = log_coeff_ + log_a_ + lf;
  if (n_ > k_) lp += static_cast<double>(n_ - k_) * parent_.log_cdf(y);
  if (k_ > 1) lp += static_cast<double>(k_ - 1) * parent_.log_sf(y);
  return std::isnan(lp) ? -kInf : lp;
}

double FiniteSampleLaw::density(double x) const { return std::exp(log_density(x)); }

double FiniteSampleLaw::log_scaled_parent_density(double x) const {
  const double y = parent_point(x);
  if (!parent_.in_support(y)) return -kInf;
  return std::log(static_cast<double>(n_)) + log_a_ + parent_.log_pdf(y);
}

double FiniteSampleLaw::cdf(double x) const {
  const double y = parent_point(x);
  if (y <= parent_.left_end()) return 0.0;
  if (y >= parent_.right_end()) return 1.0;
  const double dn = static_cast<double>(n_);
  const double log_f = parent_.log_cdf(y);
  if (k_ == 1) return std::exp(dn * log_f);
  const double log_s = parent_.log_sf(y);
  if (dn * std::exp(log_s) > static_cast<double>(k_)) {
    // Lower tail of the law: sum the k leading binomial terms directly.
    double sum = 0.0;
    for (std::uint64_t i = 0; i < k_; ++i) {
      const double di = static_cast<double>(i);
      sum += std::exp(log_binomial_term(dn, di, log_s, log_f));
    }
    return std::min(sum, 1.0);
  }
  return 1.0 - sf(x);
}

double FiniteSampleLaw::sf(double x) const {
  const double y = parent_point(x);
  if (y <= parent_.left_end()) return 1.0;
  if (y >= parent_.right_end()) return 0.0;
  const double dn = static_cast<double>(n_);
  const double log_f = parent_.log_cdf(y);
  if (k_ == 1) return -std::expm1(dn * log_f);
  const double log_s = parent_.log_sf(y);
  if (dn * std::exp(log_s) > static_cast<double>(k_)) {
    return 1.0 - cdf(x);
  }
  // Upper tail: P(Bin(n, Fbar) >= k), terms decay geometrically past the mode.
  double sum = 0.0;
  for (std::uint64_t i = k_; i <= n_; ++i) {
    const double di = static_cast<double>(i);
    const double term = std::exp(log_binomial_term(dn, di, log_s, log_f));
    sum += term;
    if (term <= 1e-18 * sum) break;
  }
  return std::min(sum, 1.0);
}

std::pair<double, double> FiniteSampleLaw::support() const {
  return {(parent_.left_end() - b_) / a_, (parent_.right_end() - b_) / a_};
}

double FiniteSampleLaw::quantile(double p) const {
  if (!(p >= 0.0 && p <= 1.0)) throw DomainError("FiniteSampleLaw::quantile: p outside [0, 1]");
  const auto [lo, hi] = support();
  if (p == 0.0) return lo;
  if (p == 1.0) return hi;
  if (k_ == 1) {
    // P(M_n <= y) = F(y)^n  =>  Fbar(y) = -expm1(log(p)/n).
    const double s = -std::expm1(std::log(p) / static_cast<double>(n_));
    return (parent_.isf(s) - b_) / a_;
  }
  std::function<double(double)> f;
  if (p <= 0.5) {
    f = [this, p](double x) { return std::log(cdf(x)) - std::log(p); };
  } else {
    f = [this, p](double x) { return std::log(1.0 - p) - std::log(sf(x)); };
  }
  const Bracket b = expand_bracket(f, lo, hi);
  return solve_monotone(f, b, 1e-13);
}

bool density_nonincreasing_in_n(const UnivariateDistribution& parent, const NormingSequence& norming,
                                std::uint64_t n_lo, std::uint64_t n_hi, const std::vector<double>& xs,
                                double rel_slack) {
  if (n_lo < 2) throw DomainError("density_nonincreasing_in_n: n_lo must be >= 2");
  FiniteSampleLaw prev(parent, norming, n_lo - 1);
  for (std::uint64_t n = n_lo; n <= n_hi; ++n) {
    FiniteSampleLaw cur(parent, norming, n);
    for (double x : xs) {
      const double before = prev.density(x);
      if (before > 0.0 && cur.density(x) > before * (1.0 + rel_slack)) {
        return false;
      }
    }
    prev = cur;
  }
  return true;
}

}  // namespace evt
