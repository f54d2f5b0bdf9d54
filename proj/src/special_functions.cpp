#include "evt/special_functions.hpp"

#include <cmath>
#include <string>

#include "evt/errors.hpp"

namespace evt {

double harmonic(std::uint64_t n) {
  if (n == 0) {
    throw DomainError("harmonic: n must be >= 1");
  }
  if (n > kHarmonicSummationLimit) {
    const double x = static_cast<double>(n);
    const double inv2 = 1.0 / (x * x);
    return SpecialConstants::euler_gamma + std::log(x) + 0.5 / x - inv2 / 12.0 +
           inv2 * inv2 / 120.0;
  }
  // Smallest terms first, with Neumaier compensation.
  double sum = 0.0;
  double carry = 0.0;
  for (std::uint64_t k = n; k >= 1; --k) {
    const double term = 1.0 / static_cast<double>(k);
    const double t = sum + term;
    carry += std::abs(sum) >= term ? (sum - t) + term : (term - t) + sum;
    sum = t;
  }
  return sum + carry;
}

double gamma_fn(double x) {
  if (!(x > 0.0)) {
    throw DomainError("gamma_fn: argument must be positive, got " + std::to_string(x));
  }
  return std::tgamma(x);
}

double digamma_int(std::uint64_t k) {
  if (k == 0) {
    throw DomainError("digamma_int: k must be >= 1");
  }
  return -SpecialConstants::euler_gamma + (k == 1 ? 0.0 : harmonic(k - 1));
}

double a_of_k(std::uint64_t k) {
  if (k == 0) {
    throw DomainError("a_of_k: k must be >= 1");
  }
  return std::tgamma(static_cast<double>(k)) * digamma_int(k);
}

double digamma_at_one_moments(int k) {
  constexpr double g = SpecialConstants::euler_gamma;
  constexpr double pi = SpecialConstants::pi;
  switch (k) {
    case 1:
      return g;
    case 2:
      return g * g + pi * pi / 6.0;
    default:
      throw DomainError("digamma_at_one_moments: only k = 1, 2 are supported");
  }
}

}  // namespace evt
