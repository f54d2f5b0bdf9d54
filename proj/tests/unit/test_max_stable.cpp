#include <limits>

#include "evt/errors.hpp"
#include "evt/max_stable.hpp"
#include "evt/quadrature.hpp"
#include "evt/special_functions.hpp"
#include "test_util.hpp"

using namespace evt;
using evt::testing::linspace;

namespace {

const double kE1 = 0.36787944117144233;

std::vector<MaxStableLaw> law_grid() {
  std::vector<MaxStableLaw> laws{MaxStableLaw::gumbel()};
  for (double a : {0.5, 1.0, 2.0, 5.0}) {
    laws.push_back(MaxStableLaw::frechet(a));
    laws.push_back(MaxStableLaw::weibull(a));
  }
  return laws;
}

std::vector<double> kth_breaks(const KthExtremeLimit& lim) {
  std::vector<double> b{lim.law.left_end()};
  for (double p : {1e-12, 1e-6, 0.01, 0.1, 0.5, 0.9, 0.99, 1.0 - 1e-6, 1.0 - 1e-12}) b.push_back(kth_quantile(lim, p));
  b.push_back(lim.law.right_end());
  return b;
}

}  // namespace

TEST_CASE("cdf examples") {
  CHECK_NEAR(cdf(MaxStableLaw::frechet(1.0), 1.0), kE1, 1e-16);
  CHECK(cdf(MaxStableLaw::weibull(2.0), 0.0) == 1.0);
  CHECK(cdf(MaxStableLaw::weibull(2.0), 3.0) == 1.0);
  CHECK(cdf(MaxStableLaw::frechet(2.0), -1.0) == 0.0);
  CHECK_NEAR(cdf(MaxStableLaw::gumbel(), 0.0), kE1, 1e-16);
}

TEST_CASE("pdf examples") {
  CHECK_NEAR(pdf(MaxStableLaw::frechet(1.0), 1.0), kE1, 1e-16);
  CHECK_NEAR(pdf(MaxStableLaw::weibull(1.0), -1.0), kE1, 1e-16);
  CHECK_NEAR(pdf(MaxStableLaw::gumbel(), 0.0), kE1, 1e-16);
  CHECK(pdf(MaxStableLaw::frechet(1.0), 0.0) == 0.0);
  CHECK(pdf(MaxStableLaw::weibull(2.0), 0.0) == 0.0);
}

TEST_CASE("closed-form entropies") {
  CHECK_NEAR(entropy(MaxStableLaw::gumbel()), 1.5772156649015328, 1e-15);
  CHECK_NEAR(entropy(MaxStableLaw::weibull(1.0)), 1.0, 1e-15);
  // -log 2 + 1.5 gamma + 1
  CHECK_NEAR(entropy(MaxStableLaw::frechet(2.0)), 1.1726763167923540, 1e-15);
}

TEST_CASE("k-th extreme cdf and pdf examples") {
  const auto g = MaxStableLaw::gumbel();
  CHECK_NEAR(kth_cdf({g, 1}, 0.0), kE1, 1e-16);
  CHECK_NEAR(kth_cdf({g, 2}, 0.0), 0.7357588823428847, 1e-15);
  CHECK(kth_cdf({MaxStableLaw::frechet(1.0), 2}, 0.0) == 0.0);
  CHECK_NEAR(kth_pdf({g, 2}, 0.0), kE1, 1e-16);
  CHECK_NEAR(kth_pdf({MaxStableLaw::frechet(1.0), 1}, 1.0), kE1, 1e-16);
  CHECK_NEAR(kth_pdf({MaxStableLaw::weibull(1.0), 3}, -1.0), 0.18393972058572117, 1e-16);
  CHECK_THROWS_AS((void)KthExtremeLimit(g, 0), DomainError);
  CHECK_THROWS_AS((void)MaxStableLaw::frechet(0.0), DomainError);
  CHECK_THROWS_AS((void)MaxStableLaw::weibull(-2.0), DomainError);
}

TEST_CASE("k-th extreme entropies") {
  const auto g = MaxStableLaw::gumbel();
  CHECK_NEAR(kth_entropy({g, 1}), 1.5772156649015328, 1e-15);
  CHECK_NEAR(kth_entropy({g, 2}), 1.1544313298030658, 1e-15);
  // -log 2 - (5/2)(1 - gamma) + 2
  CHECK_NEAR(kth_entropy({MaxStableLaw::frechet(2.0), 2}), 0.2498919816938868, 1e-14);
  for (const auto& law : law_grid()) CHECK(kth_entropy({law, 1}) == entropy(law));
}

TEST_CASE("normalization and entropy by quadrature") {
  QuadratureSpec spec;
  for (const auto& law : law_grid()) {
    for (std::uint64_t k = 1; k <= 5; ++k) {
      const KthExtremeLimit lim(law, k);
      CAPTURE(law.label());
      CAPTURE(k);
      const auto breaks = kth_breaks(lim);
      CHECK_NEAR(integrate([&](double x) { return kth_pdf(lim, x); }, breaks, spec), 1.0, 1e-8);
      const double h = integrate(
          [&](double x) {
            const double lp = kth_log_pdf(lim, x);
            return std::isfinite(lp) ? -std::exp(lp) * lp : 0.0;
          },
          breaks, spec);
      CHECK_NEAR(h, kth_entropy(lim), 1e-7);
    }
  }
}

TEST_CASE("k-th cdf is monotone and differentiates to the pdf") {
  for (const auto& law : law_grid()) {
    for (std::uint64_t k = 1; k <= 5; ++k) {
      const KthExtremeLimit lim(law, k);
      CAPTURE(law.label());
      CAPTURE(k);
      const double lo = kth_quantile(lim, 0.01);
      const double hi = kth_quantile(lim, 0.99);
      double prev = 0.0;
      for (double x : linspace(lo, hi, 60)) {
        const double c = kth_cdf(lim, x);
        CHECK(c >= prev);
        prev = c;
        // step scaled to |x|: Weibull(0.5) has a pdf singularity at 0
        const double h = 1e-5 * std::max(std::abs(x), 1e-3);
        const double d = evt::testing::central_difference([&](double t) { return kth_cdf(lim, t); }, x, h);
        CHECK_NEAR(d, kth_pdf(lim, x), 1e-6);
      }
      CHECK_NEAR(kth_cdf(lim, kth_quantile(lim, 1.0 - 1e-12)), 1.0, 1e-10);
      CHECK_NEAR(kth_cdf(lim, kth_quantile(lim, 0.3)), 0.3, 1e-12);
    }
  }
}

TEST_CASE("limit moments") {
  CHECK_NEAR(limit_moment(MaxStableLaw::frechet(3.0), 1), gamma_fn(2.0 / 3.0), 1e-14);
  CHECK_NEAR(limit_moment(MaxStableLaw::weibull(1.0), 1), -1.0, 1e-15);
  CHECK_NEAR(limit_moment(MaxStableLaw::weibull(2.0), 2), gamma_fn(2.0), 1e-15);
  CHECK_NEAR(limit_moment(MaxStableLaw::gumbel(), 1), SpecialConstants::euler_gamma, 1e-15);
  CHECK_THROWS_AS((void)limit_moment(MaxStableLaw::frechet(1.0), 1), DomainError);
  CHECK_THROWS_AS((void)limit_moment(MaxStableLaw::gumbel(), 3), DomainError);
}
