#include <algorithm>
#include <cstdlib>
#include <numbers>

#include "evt/entropy.hpp"
#include "evt/errors.hpp"
#include "evt/montecarlo.hpp"
#include "evt/random.hpp"
#include "evt/special_functions.hpp"
#include "test_util.hpp"

using namespace evt;

namespace {

SimulationPlan plan_for(const ParentSpec& p, std::uint64_t n, std::uint64_t k, std::uint64_t reps,
                        std::uint64_t seed = 20240101) {
  return SimulationPlan{p.distribution(), closed_form_norming(p), n, k, reps, seed};
}

bool within_3se(double got, double want, double se) { return std::abs(got - want) <= 3.0 * se; }

}  // namespace

TEST_CASE("generator streams") {
  Xoshiro256 a = Xoshiro256::stream(7, 3);
  Xoshiro256 b = Xoshiro256::stream(7, 3);
  Xoshiro256 c = Xoshiro256::stream(7, 4);
  bool differs = false;
  for (int i = 0; i < 16; ++i) {
    const auto x = a();
    CHECK(x == b());
    differs = differs || x != c();
  }
  CHECK(differs);
  for (int i = 0; i < 1000; ++i) {
    const double u = a.uniform_open();
    CHECK(u > 0.0);
    CHECK(u < 1.0);
  }
}

TEST_CASE("determinism") {
  const auto p = ParentSpec::exponential();
  CHECK(sample_normalized_extreme(plan_for(p, 50, 1, 1)) == sample_normalized_extreme(plan_for(p, 50, 1, 1)));
  const auto a = sample_normalized_extreme(plan_for(p, 50, 2, 10000));
  CHECK(a == sample_normalized_extreme(plan_for(p, 50, 2, 10000)));
  CHECK(a != sample_normalized_extreme(plan_for(p, 50, 2, 10000, 99)));
  CHECK_THROWS_AS((void)sample_normalized_extreme(plan_for(p, 3, 4, 10)), DomainError);
  CHECK_THROWS_AS((void)sample_normalized_extreme(plan_for(p, 3, 1, 0)), DomainError);
}

TEST_CASE("summary statistics") {
  const auto s = summarize({1.0, 2.0, 3.0, 4.0});
  CHECK_NEAR(s.mean, 2.5, 1e-15);
  CHECK_NEAR(s.std_error, std::sqrt(5.0 / 3.0) / 2.0, 1e-15);
  CHECK(s.count == 4);
}

TEST_CASE("uniform maxima match Weibull(1) in Kolmogorov distance") {
  auto xs = sample_normalized_extreme(plan_for(ParentSpec::uniform01(), 1'000'000, 1, 10000));
  std::sort(xs.begin(), xs.end());
  const auto g = MaxStableLaw::weibull(1.0);
  double d = 0.0;
  const double m = static_cast<double>(xs.size());
  for (std::size_t i = 0; i < xs.size(); ++i) {
    const double c = cdf(g, xs[i]);
    d = std::max({d, std::abs(static_cast<double>(i + 1) / m - c), std::abs(static_cast<double>(i) / m - c)});
  }
  CHECK(d < 0.02);
}

TEST_CASE("exponential block maxima mean") {
  const auto s = summarize(sample_normalized_extreme(plan_for(ParentSpec::exponential(), 1000, 1, 100000)));
  const double want = harmonic(1000) - std::log(1000.0);
  CHECK(std::abs(s.mean - want) <= 3.0 * (std::numbers::pi / std::sqrt(6.0)) / std::sqrt(1e5));
}

TEST_CASE("mean of exponential maxima table") {
  const auto rows = check_lemma2({1, 100, 10000}, 100000, 20240101);
  REQUIRE(rows.size() == 3);
  CHECK_NEAR(rows[0].exact_mean, 1.0, 1e-15);
  CHECK_NEAR(rows[2].exact_mean, 0.5772656640, 1e-10);
  for (const auto& r : rows) {
    CHECK_NEAR(r.exact_mean, harmonic(r.n) - std::log(static_cast<double>(r.n)), 1e-12);
    CHECK(r.limit == SpecialConstants::euler_gamma);
    CHECK(within_3se(r.empirical_mean, r.exact_mean, r.std_error));
  }
}

TEST_CASE("resubstitution entropy") {
  const auto u = resub_entropy(plan_for(ParentSpec::uniform01(), 2, 1, 1'000'000));
  CHECK_NEAR(u.value, 0.5, 0.005);
  CHECK(u.excluded == 0);
  const auto e = resub_entropy(plan_for(ParentSpec::exponential(), 10, 1, 1'000'000));
  CHECK_NEAR(e.value, 0.9 + harmonic(10) - std::log(10.0), 0.01);

  const auto p2 = ParentSpec::pareto(2.0);
  const auto plan = plan_for(p2, 100, 2, 100000);
  const auto r = resub_entropy(plan);
  CHECK(within_3se(r.value, entropy_of(FiniteSampleLaw(plan.parent, plan.norming, 100, 2)), r.std_error));

  SUBCASE("agrees with quadrature on the worked grid") {
    for (const auto& p : {ParentSpec::pareto(2.0), ParentSpec::uniform01(), ParentSpec::exponential(),
                          ParentSpec::std_normal()}) {
      for (std::uint64_t n : {10ull, 100ull}) {
        for (std::uint64_t k : {1ull, 2ull}) {
          CAPTURE(p.label());
          CAPTURE(n);
          CAPTURE(k);
          const auto pl = plan_for(p, n, k, 100000, 1000 * n + k);
          const auto est = resub_entropy(pl);
          CHECK(within_3se(est.value, entropy_of(FiniteSampleLaw(pl.parent, pl.norming, n, k)), est.std_error));
        }
      }
    }
  }
}

TEST_CASE("moment convergence") {
  const auto p3 = ParentSpec::pareto(3.0);
  const auto a = check_moment_convergence(p3.distribution(), closed_form_norming(p3), p3.limit(), 1, {10000}, 100000,
                                          20240101);
  CHECK_NEAR(a[0].limit_moment, 1.3541179394264, 1e-12);
  CHECK(within_3se(a[0].empirical_moment, a[0].limit_moment, a[0].std_error));

  const auto u = ParentSpec::uniform01();
  const auto b =
      check_moment_convergence(u.distribution(), closed_form_norming(u), u.limit(), 1, {10000}, 100000, 20240101);
  CHECK_NEAR(b[0].limit_moment, -1.0, 1e-15);
  CHECK(within_3se(b[0].empirical_moment, -1.0, b[0].std_error));

  const auto e = ParentSpec::exponential();
  const auto c =
      check_moment_convergence(e.distribution(), closed_form_norming(e), e.limit(), 1, {10000}, 100000, 20240101);
  CHECK(within_3se(c[0].empirical_moment, SpecialConstants::euler_gamma, c[0].std_error));

  CHECK_THROWS_AS((void)check_moment_convergence(p3.distribution(), closed_form_norming(p3), p3.limit(), 3, {100},
                                                 1000, 1),
                  DomainError);
}

TEST_CASE("results do not depend on the thread count") {
  const auto p = ParentSpec::std_normal();
  const auto plan = plan_for(p, 100, 2, 20000);
  ::setenv("EVT_ENTROPY_THREADS", "1", 1);
  const auto serial = sample_normalized_extreme(plan);
  const auto serial_h = resub_entropy(plan);
  const auto serial_sweep = convergence_sweep(plan.parent, plan.norming, p.limit(), {2, 5, 10, 50}, 1);
  ::setenv("EVT_ENTROPY_THREADS", "4", 1);
  CHECK(sample_normalized_extreme(plan) == serial);
  CHECK(resub_entropy(plan).value == serial_h.value);
  CHECK(convergence_sweep(plan.parent, plan.norming, p.limit(), {2, 5, 10, 50}, 1).entropy_values ==
        serial_sweep.entropy_values);
  ::unsetenv("EVT_ENTROPY_THREADS");
}
