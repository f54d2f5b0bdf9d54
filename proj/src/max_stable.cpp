#include "evt/max_stable.hpp"

#include <cmath>
#include <limits>
#include <sstream>

#include "evt/errors.hpp"
#include "evt/roots.hpp"
#include "evt/special_functions.hpp"

namespace evt {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// Every law is written through t(x) = -log G(x), which maps the support
// onto (0, inf) and turns K_k into a Gamma(k) tail in t:
//   Frechet t = x^-alpha, Weibull t = (-x)^alpha, Gumbel t = e^-x.
struct Transform {
  double t;         // -log G(x)
  double log_t;     // log t
  double log_dtdx;  // log |dt/dx|
};

// Nullopt-like flag: false when x lies outside the open support.
bool transform(const MaxStableLaw& law, double x, Transform& out) {
  const double a = law.alpha();
  switch (law.family()) {
    case Family::Frechet:
      if (!(x > 0.0)) return false;
      out.log_t = -a * std::log(x);
      out.t = std::exp(out.log_t);
      out.log_dtdx = std::log(a) - (a + 1.0) * std::log(x);
      return std::isfinite(x);
    case Family::Weibull:
      if (!(x < 0.0)) return false;
      out.log_t = a * std::log(-x);
      out.t = std::exp(out.log_t);
      out.log_dtdx = std::log(a) + (a - 1.0) * std::log(-x);
      return std::isfinite(x);
    case Family::Gumbel:
      if (!std::isfinite(x)) return false;
      out.log_t = -x;
      out.t = std::exp(-x);
      out.log_dtdx = -x;
      return true;
  }
  return false;
}

double t_to_x(const MaxStableLaw& law, double t) {
  switch (law.family()) {
    case Family::Frechet:
      return std::pow(t, -1.0 / law.alpha());
    case Family::Weibull:
      return -std::pow(t, 1.0 / law.alpha());
    case Family::Gumbel:
      return -std::log(t);
  }
  return 0.0;
}

// P(Gamma(k) > t) = e^-t sum_{i<k} t^i / i!, summed in log space.
double gamma_upper_tail(std::uint64_t k, double t) {
  if (t <= 0.0) return 1.0;
  if (std::isinf(t)) return 0.0;
  const double log_t = std::log(t);
  double sum = 0.0;
  for (std::uint64_t i = 0; i < k; ++i) {
    const double di = static_cast<double>(i);
    sum += std::exp(-t + di * log_t - std::lgamma(di + 1.0));
  }
  return std::min(sum, 1.0);
}

}  // namespace

std::string to_string(Family f) {
  switch (f) {
    case Family::Frechet:
      return "Frechet";
    case Family::Weibull:
      return "Weibull";
    case Family::Gumbel:
      return "Gumbel";
  }
  return "?";
}

MaxStableLaw MaxStableLaw::frechet(double alpha) {
  if (!(alpha > 0.0)) throw DomainError("Frechet law needs alpha > 0");
  return {Family::Frechet, alpha};
}

MaxStableLaw MaxStableLaw::weibull(double alpha) {
  if (!(alpha > 0.0)) throw DomainError("Weibull law needs alpha > 0");
  return {Family::Weibull, alpha};
}

MaxStableLaw MaxStableLaw::gumbel() { return {Family::Gumbel, 1.0}; }

double MaxStableLaw::left_end() const noexcept {
  return family_ == Family::Frechet ? 0.0 : -kInf;
}

double MaxStableLaw::right_end() const noexcept {
  return family_ == Family::Weibull ? 0.0 : kInf;
}

std::string MaxStableLaw::label() const {
  if (family_ == Family::Gumbel) return "Gumbel";
  std::ostringstream os;
  os << to_string(family_) << "(alpha=" << alpha_ << ")";
  return os.str();
}

KthExtremeLimit::KthExtremeLimit(MaxStableLaw l, std::uint64_t rank) : law(l), k(rank) {
  if (k == 0) throw DomainError("KthExtremeLimit: k must be >= 1");
}

double neg_log_cdf(const MaxStableLaw& law, double x) {
  Transform tr{};
  if (transform(law, x, tr)) return tr.t;
  if (law.family() == Family::Frechet && x <= 0.0) return kInf;
  if (law.family() == Family::Weibull && x >= 0.0) return 0.0;
  if (law.family() == Family::Frechet) return 0.0;  // x = +inf
  return x > 0.0 ? 0.0 : kInf;
}

double cdf(const MaxStableLaw& law, double x) { return std::exp(-neg_log_cdf(law, x)); }

double log_pdf(const MaxStableLaw& law, double x) { return kth_log_pdf(KthExtremeLimit(law, 1), x); }

double pdf(const MaxStableLaw& law, double x) { return kth_pdf(KthExtremeLimit(law, 1), x); }

double quantile(const MaxStableLaw& law, double p) { return kth_quantile(KthExtremeLimit(law, 1), p); }

double entropy(const MaxStableLaw& law) { return kth_entropy(KthExtremeLimit(law, 1)); }

double kth_cdf(const KthExtremeLimit& lim, double x) {
  return gamma_upper_tail(lim.k, neg_log_cdf(lim.law, x));
}

double kth_log_pdf(const KthExtremeLimit& lim, double x) {
  Transform tr{};
  if (!transform(lim.law, x, tr)) return -kInf;
  const double km1 = static_cast<double>(lim.k - 1);
  const double lp = tr.log_dtdx - tr.t + km1 * tr.log_t - std::lgamma(km1 + 1.0);
  return std::isnan(lp) ? -kInf : lp;
}

double kth_pdf(const KthExtremeLimit& lim, double x) { return std::exp(kth_log_pdf(lim, x)); }

double kth_quantile(const KthExtremeLimit& lim, double p) {
  if (!(p > 0.0 && p < 1.0)) {
    if (p == 0.0) return lim.law.left_end();
    if (p == 1.0) return lim.law.right_end();
    throw DomainError("kth_quantile: probability outside [0, 1]");
  }
  if (lim.k == 1) {
    return t_to_x(lim.law, -std::log(p));
  }
  // Solve P(Gamma(k) > t) = p for t (decreasing in t), then map back.
  auto f = [&](double t) { return p - gamma_upper_tail(lim.k, t); };
  const double k = static_cast<double>(lim.k);
  double hi = k + 10.0 * std::sqrt(k) + 50.0;
  while (f(hi) < 0.0) hi *= 2.0;
  const double t = solve_monotone(f, Bracket{0.0, hi}, 1e-15);
  return t_to_x(lim.law, t);
}

double kth_entropy(const KthExtremeLimit& lim) {
  // With t ~ Gamma(k): E[log t] = psi(k) = -gamma + H_{k-1}, E[t] = k.
  const double k = static_cast<double>(lim.k);
  const double psi = a_of_k(lim.k) / std::tgamma(k);
  const double log_norm = std::lgamma(k);  // log (k-1)!
  const double a = lim.law.alpha();
  switch (lim.law.family()) {
    case Family::Frechet:
      return -(std::log(a) - log_norm) - ((a * k + 1.0) / a) * psi + k;
    case Family::Weibull:
      return -(std::log(a) - log_norm) - ((a * k - 1.0) / a) * psi + k;
    case Family::Gumbel:
      return log_norm - k * psi + k;
  }
  return 0.0;
}

double limit_moment(const MaxStableLaw& law, int power) {
  if (power < 1) throw DomainError("limit_moment: power must be >= 1");
  const double p = static_cast<double>(power);
  switch (law.family()) {
    case Family::Frechet:
      if (!(p < law.alpha())) {
        throw DomainError("limit_moment: Frechet moment of order >= alpha does not exist");
      }
      return gamma_fn(1.0 - p / law.alpha());
    case Family::Weibull:
      return (power % 2 == 0 ? 1.0 : -1.0) * gamma_fn(1.0 + p / law.alpha());
    case Family::Gumbel:
      return digamma_at_one_moments(power);
  }
  return 0.0;
}

}  // namespace evt
