#pragma once

#include <cstdint>

namespace evt {

/// Constants shared across the library.
struct SpecialConstants {
  static constexpr double euler_gamma = 0.57721566490153286060651209008240243;
  static constexpr double pi = 3.14159265358979323846264338327950288;
  /// Decimal digits the library aims for in its closed forms.
  static constexpr int precision = 15;
};

/// Largest n for which harmonic() sums directly; beyond it the asymptotic
/// expansion gamma + ln n + 1/(2n) - 1/(12n^2) + 1/(120n^4) is used.
inline constexpr std::uint64_t kHarmonicSummationLimit = 10'000'000;

/// H_n = sum_{k=1}^n 1/k. Throws DomainError for n == 0.
[[nodiscard]] double harmonic(std::uint64_t n);

/// Euler Gamma function for x > 0.
[[nodiscard]] double gamma_fn(double x);

/// A(k) = int_0^inf u^{k-1} e^{-u} log u du = (k-1)! (-gamma + H_{k-1}).
[[nodiscard]] double a_of_k(std::uint64_t k);

/// Digamma at an integer argument: psi(k) = -gamma + H_{k-1}.
[[nodiscard]] double digamma_int(std::uint64_t k);

/// k-th moment of the standard Gumbel law, (-1)^k Gamma^{(k)}(1), for k in {1, 2}.
[[nodiscard]] double digamma_at_one_moments(int k);

}  // namespace evt
