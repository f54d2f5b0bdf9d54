#include "evt/entropy.hpp"
#include "evt/errors.hpp"
#include "evt/special_functions.hpp"
#include "test_util.hpp"

using namespace evt;

namespace {

FiniteSampleLaw make(const ParentSpec& p, std::uint64_t n, std::uint64_t k = 1) {
  return FiniteSampleLaw(p.distribution(), closed_form_norming(p), n, k);
}

double oracle_h(const ParentSpec& p, std::uint64_t n) {
  const double nn = static_cast<double>(n);
  const double hl = harmonic(n) - std::log(nn);
  switch (p.kind) {
    case ParentKind::Uniform01: return (nn - 1) / nn;
    case ParentKind::Exponential: return (nn - 1) / nn + hl;
    case ParentKind::Pareto: return (nn - 1) / nn - std::log(p.alpha) + (p.alpha + 1) / p.alpha * hl;
    default: return std::nan("");
  }
}

}  // namespace

TEST_CASE("entropy examples") {
  // tail_cut = 1e-10 bounds the truncation error near 1e-9
  CHECK_NEAR(entropy_of(make(ParentSpec::uniform01(), 1)), 0.0, 1e-8);
  CHECK_NEAR(entropy_of(make(ParentSpec::uniform01(), 2)), 0.5, 1e-8);
  CHECK_NEAR(entropy_of(make(ParentSpec::exponential(), 2)), 1.3068528194400547, 1e-8);
}

TEST_CASE("I1 and I2") {
  CHECK(i1_exact(1) == 0.0);
  CHECK(i1_exact(2) == -0.5);
  CHECK_NEAR(i1_exact(1'000'000), -0.999999, 1e-15);
  CHECK_THROWS_AS((void)i1_exact(0), DomainError);

  CHECK_NEAR(i2_of(make(ParentSpec::uniform01(), 7)), 0.0, 1e-12);
  CHECK_NEAR(i2_of(make(ParentSpec::exponential(), 10)), -0.6263831610, 1e-8);
  CHECK_NEAR(i2_of(make(ParentSpec::pareto(1.0), 1)), -2.0, 1e-8);
  CHECK_THROWS_AS((void)i2_of(make(ParentSpec::exponential(), 10, 2)), DomainError);

  SUBCASE("H = -(I1 + I2)") {
    for (const auto& p : {ParentSpec::pareto(2.0), ParentSpec::uniform01(), ParentSpec::exponential(),
                          ParentSpec::std_normal()}) {
      for (std::uint64_t n : {2ull, 10ull, 100ull}) {
        const auto law = make(p, n);
        CHECK_NEAR(entropy_of(law), -(i1_exact(n) + i2_of(law)), 1e-8);
      }
    }
  }
}

TEST_CASE("cross-entropy term") {
  const auto p2 = ParentSpec::pareto(2.0);
  const auto law = make(p2, 10);
  CHECK_NEAR(delta_of(law, {p2.limit(), 1}), entropy_of(law) + 1.0 / 110.0, 1e-8);
  CHECK_NEAR(delta_of(make(ParentSpec::uniform01(), 1), {MaxStableLaw::weibull(1.0), 1}), 0.5, 1e-8);
  // E[X + e^-X] = (H_2 - log 2) + 2/3
  CHECK_NEAR(delta_of(make(ParentSpec::exponential(), 2), {MaxStableLaw::gumbel(), 1}),
             1.5 - std::log(2.0) + 2.0 / 3.0, 1e-8);

  // exponential maxima live on (-log n, inf), outside the Frechet support
  CHECK_THROWS_AS((void)delta_of(make(ParentSpec::exponential(), 10), {MaxStableLaw::frechet(1.0), 1}), DomainError);
  CHECK_THROWS_AS((void)kl_of(make(ParentSpec::exponential(), 10), {MaxStableLaw::weibull(1.0), 1}), DomainError);
}

TEST_CASE("relative entropy") {
  CHECK_NEAR(kl_of(make(ParentSpec::pareto(2.0), 10), {MaxStableLaw::frechet(2.0), 1}), 0.00909090909, 1e-7);
  CHECK_NEAR(kl_of(make(ParentSpec::uniform01(), 100), {MaxStableLaw::weibull(1.0), 1}), 9.90099e-5, 1e-8);
  CHECK_NEAR(kl_of(make(ParentSpec::uniform01(), 1), {MaxStableLaw::weibull(1.0), 1}), 0.5, 1e-9);
}

TEST_CASE("finite-n oracles") {
  for (const auto& p : {ParentSpec::pareto(1.0), ParentSpec::pareto(2.0), ParentSpec::uniform01(),
                        ParentSpec::exponential()}) {
    for (std::uint64_t n : {1ull, 2ull, 10ull, 100ull, 10000ull}) {
      CAPTURE(p.label());
      CAPTURE(n);
      const auto law = make(p, n);
      CHECK_NEAR(entropy_of(law), oracle_h(p, n), 1e-6);
      const double d = kl_of(law, {p.limit(), 1});
      const double nn = static_cast<double>(n);
      CHECK_NEAR(d, 1.0 / (nn * (nn + 1.0)), 1e-6);
      CHECK(d >= -1e-9);
    }
  }
}

TEST_CASE("limits") {
  for (const auto& p : {ParentSpec::pareto(2.0), ParentSpec::uniform01(), ParentSpec::exponential()}) {
    CHECK(std::abs(entropy_of(make(p, 10000)) - entropy(p.limit())) < 1e-3);
  }
  double prev = 1.0;
  for (std::uint64_t n : {100ull, 1000ull, 10000ull}) {
    const double gap = std::abs(entropy_of(make(ParentSpec::std_normal(), n)) - entropy(MaxStableLaw::gumbel()));
    CHECK(gap < prev);
    prev = gap;
  }
  const auto ex = ParentSpec::exponential();
  for (std::uint64_t k : {2ull, 3ull}) {
    CHECK(std::abs(entropy_of(make(ex, 10000, k)) - kth_entropy({ex.limit(), k})) < 5e-3);
  }
}

TEST_CASE("limit entropy by quadrature") {
  CHECK_NEAR(limit_entropy_by_quadrature({MaxStableLaw::gumbel(), 3}), kth_entropy({MaxStableLaw::gumbel(), 3}), 1e-7);
  CHECK_NEAR(limit_entropy_by_quadrature({MaxStableLaw::frechet(0.5), 1}), entropy(MaxStableLaw::frechet(0.5)), 1e-7);
}

TEST_CASE("convergence sweeps") {
  const auto p2 = ParentSpec::pareto(2.0);
  const auto a = convergence_sweep(p2.distribution(), closed_form_norming(p2), p2.limit(), {2, 10, 100}, 1);
  CHECK(a.monotone_increasing);
  CHECK(a.gaps[0] > a.gaps[1]);
  CHECK(a.gaps[1] > a.gaps[2]);
  CHECK(a.limit_entropy == entropy(p2.limit()));

  const auto z = ParentSpec::std_normal();
  const auto b = convergence_sweep(z.distribution(), closed_form_norming(z), z.limit(), {4, 16, 256}, 1);
  CHECK_FALSE(b.monotone_increasing);

  const auto ex = ParentSpec::exponential();
  const auto c = convergence_sweep(ex.distribution(), closed_form_norming(ex), ex.limit(), {2, 10}, 2);
  for (double kl : c.kl_values) CHECK(kl >= 0.0);
  CHECK(c.limit_entropy == kth_entropy({ex.limit(), 2}));

  CHECK_THROWS_AS((void)convergence_sweep(ex.distribution(), closed_form_norming(ex), ex.limit(), {10, 5}, 1),
                  DomainError);
  CHECK_THROWS_AS((void)convergence_sweep(ex.distribution(), closed_form_norming(ex), ex.limit(), {2, 5}, 3),
                  DomainError);
}

TEST_CASE("monotone helper") {
  CHECK(is_monotone_increasing({1.0, 2.0, 3.0}, 0.0));
  CHECK(is_monotone_increasing({1.0, 1.0 - 1e-13, 3.0}, 1e-12));
  CHECK_FALSE(is_monotone_increasing({1.0, 0.5, 3.0}, 1e-12));
}
