#include "evt/norming.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <cmath>
#include <numbers>
#include <sstream>
#include <utility>

#include "evt/errors.hpp"

namespace evt {

ParentSpec ParentSpec::parse(const std::string& family, double alpha) {
  std::string f = family;
  std::transform(f.begin(), f.end(), f.begin(), [](unsigned char c) { return std::tolower(c); });
  if (f == "pareto") return pareto(alpha);
  if (f == "uniform" || f == "uniform01") return uniform01();
  if (f == "exponential" || f == "exp") return exponential();
  if (f == "normal" || f == "std_normal" || f == "gaussian") return std_normal();
  throw DomainError("unknown family '" + family + "'");
}

std::string ParentSpec::label() const {
  switch (kind) {
    case ParentKind::Pareto: {
      std::ostringstream os;
      os << "pareto(alpha=" << alpha << ")";
      return os.str();
    }
    case ParentKind::Uniform01:
      return "uniform";
    case ParentKind::Exponential:
      return "exponential";
    case ParentKind::StdNormal:
      return "normal";
  }
  return "?";
}

UnivariateDistribution ParentSpec::distribution() const {
  switch (kind) {
    case ParentKind::Pareto:
      return make_pareto(alpha);
    case ParentKind::Uniform01:
      return make_uniform01();
    case ParentKind::Exponential:
      return make_exponential();
    case ParentKind::StdNormal:
      return make_std_normal();
  }
  throw DomainError("unknown parent kind");
}

MaxStableLaw ParentSpec::limit() const {
  switch (kind) {
    case ParentKind::Pareto:
      return MaxStableLaw::frechet(alpha);
    case ParentKind::Uniform01:
      return MaxStableLaw::weibull(1.0);
    case ParentKind::Exponential:
    case ParentKind::StdNormal:
      return MaxStableLaw::gumbel();
  }
  throw DomainError("unknown parent kind");
}

NormingSequence::NormingSequence(Evaluator scale, Evaluator center, MaxStableLaw target,
                                 NormingProvenance provenance)
    : scale_(std::move(scale)), center_(std::move(center)), target_(target), provenance_(provenance) {}

double NormingSequence::scale(std::uint64_t n) const {
  if (n == 0) throw DomainError("norming: n must be >= 1");
  const double a = scale_(n);
  if (!(a > 0.0) || !std::isfinite(a)) {
    throw DomainError("norming: scale a_n is not positive at n = " + std::to_string(n));
  }
  return a;
}

double NormingSequence::center(std::uint64_t n) const {
  if (n == 0) throw DomainError("norming: n must be >= 1");
  return center_(n);
}

NormingSequence closed_form_norming(const ParentSpec& spec) {
  const MaxStableLaw target = spec.limit();
  switch (spec.kind) {
    case ParentKind::Pareto: {
      const double alpha = spec.alpha;
      return {[alpha](std::uint64_t n) { return std::pow(static_cast<double>(n), 1.0 / alpha); },
              [](std::uint64_t) { return 0.0; }, target, NormingProvenance::ClosedForm};
    }
    case ParentKind::Uniform01:
      return {[](std::uint64_t n) { return 1.0 / static_cast<double>(n); }, [](std::uint64_t) { return 1.0; },
              target, NormingProvenance::ClosedForm};
    case ParentKind::Exponential:
      return {[](std::uint64_t) { return 1.0; },
              [](std::uint64_t n) { return std::log(static_cast<double>(n)); }, target,
              NormingProvenance::ClosedForm};
    case ParentKind::StdNormal: {
      auto root = [](std::uint64_t n) {
        if (n < 2) throw DomainError("normal norming constants need n >= 2 (log log n)");
        return std::sqrt(2.0 * std::log(static_cast<double>(n)));
      };
      return {[root](std::uint64_t n) { return 1.0 / root(n); },
              [root](std::uint64_t n) {
                const double r = root(n);
                const double ll = std::log(std::log(static_cast<double>(n)));
                return r - (ll + std::log(4.0 * std::numbers::pi)) / (2.0 * r);
              },
              target, NormingProvenance::ClosedForm};
    }
  }
  throw DomainError("closed_form_norming: unknown family");
}

double auxiliary_function(const UnivariateDistribution& parent, double t, const QuadratureSpec& spec) {
  const double sf_t = parent.sf(t);
  if (!(sf_t > 0.0)) {
    throw DomainError("auxiliary_function: t lies at or beyond r(F)");
  }
  auto ratio = [&](double s) { return std::exp(parent.log_sf(s) - parent.log_sf(t)); };
  const double r = parent.right_end();
  if (std::isfinite(r)) {
    return integrate(ratio, t, r, spec);
  }
  // Integrate block by block, each block 60 mean-excess lengths long, until
  // the remaining survival mass is negligible.
  double mean_excess = std::exp(parent.log_sf(t) - parent.log_pdf(t));
  if (!std::isfinite(mean_excess) || mean_excess <= 0.0) mean_excess = 1.0;
  double total = 0.0;
  double lo = t;
  for (int block = 0; block < 64; ++block) {
    const double hi = lo + 60.0 * mean_excess;
    const double part = integrate(ratio, lo, hi, spec);
    total += part;
    if (ratio(hi) * (hi - lo) <= 1e-15 * total || part <= 1e-16 * total) {
      return total;
    }
    lo = hi;
    mean_excess *= 2.0;
  }
  throw DomainError("auxiliary_function: mean-excess integral does not converge");
}

NormingSequence quantile_norming(const UnivariateDistribution& parent, const MaxStableLaw& target) {
  auto upper_quantile = [parent](std::uint64_t n) {
    if (n < 2) {
      // F^{-1}(0) is the left endpoint.
      return parent.isf(1.0);
    }
    return parent.isf(1.0 / static_cast<double>(n));
  };
  switch (target.family()) {
    case Family::Frechet:
      return {upper_quantile, [](std::uint64_t) { return 0.0; }, target, NormingProvenance::QuantileRecipe};
    case Family::Weibull: {
      const double r = parent.right_end();
      if (!std::isfinite(r)) {
        throw InconsistencyError("quantile_norming: Weibull target needs a finite right endpoint");
      }
      return {[upper_quantile, r](std::uint64_t n) { return r - upper_quantile(n); },
              [r](std::uint64_t) { return r; }, target, NormingProvenance::QuantileRecipe};
    }
    case Family::Gumbel:
      return {[upper_quantile, parent](std::uint64_t n) {
                return auxiliary_function(parent, upper_quantile(n));
              },
              upper_quantile, target, NormingProvenance::QuantileRecipe};
  }
  throw DomainError("quantile_norming: unknown target");
}

}  // namespace evt
