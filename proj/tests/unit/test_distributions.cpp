#include <numbers>

#include "evt/distributions.hpp"
#include "evt/errors.hpp"
#include "test_util.hpp"

using namespace evt;
using evt::testing::linspace;

namespace {

struct Case {
  UnivariateDistribution d;
  double lo, hi;  // interior grid
};

std::vector<Case> builtins() {
  return {{make_pareto(2.0), 1.05, 30.0},
          {make_pareto(0.5), 1.05, 50.0},
          {make_uniform01(), 0.01, 0.99},
          {make_exponential(), 0.01, 20.0},
          {make_std_normal(), -6.0, 6.0}};
}

}  // namespace

TEST_CASE("pareto") {
  CHECK_NEAR(make_pareto(2.0).cdf(2.0), 0.75, 1e-15);
  CHECK_NEAR(make_pareto(1.0).pdf(2.0), 0.25, 1e-15);
  CHECK_NEAR(make_pareto(2.0).quantile(0.99), 10.0, 1e-12);
  CHECK(make_pareto(2.0).left_end() == 1.0);
  CHECK(std::isinf(make_pareto(2.0).right_end()));
  CHECK_THROWS_AS((void)make_pareto(0.0), DomainError);
  CHECK_THROWS_AS((void)make_pareto(-1.0), DomainError);
}

TEST_CASE("uniform") {
  const auto u = make_uniform01();
  CHECK_NEAR(u.cdf(0.3), 0.3, 1e-16);
  CHECK(u.pdf(1.5) == 0.0);
  CHECK(u.pdf(-0.5) == 0.0);
  CHECK_NEAR(u.quantile(0.9), 0.9, 1e-16);
}

TEST_CASE("exponential") {
  const auto e = make_exponential();
  CHECK(e.cdf(0.0) == 0.0);
  CHECK_NEAR(e.quantile(1.0 - std::exp(-1.0)), 1.0, 1e-15);
  CHECK_NEAR(e.pdf(2.0), 0.1353352832366127, 1e-16);
}

TEST_CASE("standard normal") {
  const auto z = make_std_normal();
  CHECK_NEAR(z.cdf(0.0), 0.5, 1e-16);
  CHECK_NEAR(z.pdf(0.0), 0.3989422804014327, 1e-16);
  CHECK_NEAR(z.quantile(0.975), 1.959963984540054, 1e-12);
  CHECK_THROWS_AS((void)z.quantile(0.0), DomainError);
  CHECK_THROWS_AS((void)z.quantile(1.0), DomainError);

  SUBCASE("survival function stays accurate in the far tail") {
    // Mills ratio: sf(x) ~ pdf(x)/x (1 - 1/x^2 + 3/x^4)
    const double x = 30.0;
    const double mills = z.pdf(x) / x * (1.0 - 1.0 / (x * x) + 3.0 / std::pow(x, 4) - 15.0 / std::pow(x, 6));
    CHECK(z.sf(x) == doctest::Approx(mills).epsilon(1e-8));
    CHECK(z.isf(1e-300) == doctest::Approx(37.0471).epsilon(1e-5));
  }
}

TEST_CASE("cdf invariants on every built-in") {
  for (const auto& c : builtins()) {
    CAPTURE(c.d.name());
    double prev = -1.0;
    for (double x : linspace(c.lo - 1.0, c.hi + 1.0, 200)) {
      const double p = c.d.cdf(x);
      CHECK(p >= prev);
      prev = p;
      if (!c.d.in_support(x)) CHECK(c.d.pdf(x) == 0.0);
    }
    CHECK(c.d.cdf(c.d.left_end()) <= 1e-12);
    CHECK(c.d.sf(c.d.right_end()) <= 1e-12);
    for (double x : linspace(c.lo, c.hi, 50)) {
      const double h = 1e-5 * std::max(1.0, std::abs(x));
      const double deriv = evt::testing::central_difference([&](double t) { return c.d.cdf(t); }, x, h);
      CHECK(std::abs(deriv - c.d.pdf(x)) <= std::max(1e-6, 1e-4 * c.d.pdf(x)));
      const double p = c.d.cdf(x);
      if (p < 1.0 - 1e-6) CHECK_NEAR(c.d.quantile(p), x, 1e-9 * std::max(1.0, std::abs(x)));
      CHECK_NEAR(c.d.cdf(x) + c.d.sf(x), 1.0, 1e-15);
      if (c.d.pdf(x) > 0.0) CHECK_NEAR(c.d.log_pdf(x), std::log(c.d.pdf(x)), 1e-12);
    }
  }
}

TEST_CASE("location-scale wrapping") {
  for (const auto& c : builtins()) {
    CAPTURE(c.d.name());
    const auto same = location_scale(c.d, 0.0, 1.0);
    CHECK(same.left_end() == c.d.left_end());
    CHECK(same.right_end() == c.d.right_end());
    for (double x : linspace(c.lo, c.hi, 25)) {
      CHECK(same.cdf(x) == c.d.cdf(x));
      CHECK(same.pdf(x) == c.d.pdf(x));
    }
    const auto w = location_scale(c.d, 2.0, 3.0);
    for (double x : linspace(c.lo, c.hi, 25)) {
      const double y = 2.0 + 3.0 * x;
      CHECK_NEAR(w.cdf(y), c.d.cdf(x), 1e-15);
      CHECK_NEAR(w.pdf(y), c.d.pdf(x) / 3.0, 1e-15);
    }
    if (std::isfinite(c.d.right_end())) CHECK_NEAR(w.right_end(), 2.0 + 3.0 * c.d.right_end(), 1e-15);
  }
  CHECK_THROWS_AS((void)location_scale(make_exponential(), 0.0, 0.0), DomainError);
  const LocationScale ls{make_uniform01(), 1.0, 2.0};
  CHECK_NEAR(ls.distribution().quantile(0.5), 2.0, 1e-15);
}
