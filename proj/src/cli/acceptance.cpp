#include "evt/cli/acceptance.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <limits>
#include <optional>
#include <sstream>
#include <tuple>

#include "evt/classify.hpp"
#include "evt/cli/commands.hpp"
#include "evt/entropy.hpp"
#include "evt/errors.hpp"
#include "evt/finite_sample.hpp"
#include "evt/montecarlo.hpp"
#include "evt/norming.hpp"
#include "evt/special_functions.hpp"

namespace evt::cli {
namespace {

constexpr double kGamma = SpecialConstants::euler_gamma;

// Collects sub-checks; the detail keeps the first failure and the worst error.
class Checks {
 public:
  void expect(bool ok, const std::string& what) {
    ++count_;
    if (!ok && first_failure_.empty()) first_failure_ = what;
    ok_ = ok_ && ok;
  }
  void near(double got, double want, double tol, const std::string& what) {
    const double err = std::abs(got - want);
    worst_ = std::max(worst_, err);
    std::ostringstream s;
    s.precision(12);
    s << what << ": got " << got << " want " << want << " (err " << err << ", tol " << tol << ")";
    expect(err <= tol, s.str());
  }
  void note(const std::string& text) { notes_ += (notes_.empty() ? "" : "; ") + text; }

  [[nodiscard]] bool ok() const { return ok_; }
  [[nodiscard]] std::string detail() const {
    std::ostringstream s;
    s.precision(3);
    if (!ok_) {
      s << "FAILED " << first_failure_;
    } else {
      s << count_ << " checks";
      if (worst_ > 0) s << ", max err " << worst_;
    }
    if (!notes_.empty()) s << "; " << notes_;
    return s.str();
  }

 private:
  bool ok_ = true;
  int count_ = 0;
  double worst_ = 0;
  std::string first_failure_;
  std::string notes_;
};

std::string num(double v) {
  std::ostringstream s;
  s.precision(6);
  s << v;
  return s.str();
}

bool within_se(double got, double want, double se, double bands = 3.0) {
  return std::abs(got - want) <= bands * se;
}

QuadratureSpec tight() {
  QuadratureSpec s;
  s.abs_tol = 1e-12;
  s.rel_tol = 1e-12;
  return s;
}

void criterion1(Checks& c) {
  const QuadratureSpec spec = tight();
  c.near(entropy(MaxStableLaw::gumbel()), kGamma + 1.0, 1e-12, "H(Gumbel)");
  c.near(entropy(MaxStableLaw::weibull(1.0)), 1.0, 1e-12, "H(Weibull 1)");
  for (double a : {0.5, 1.0, 2.0, 5.0}) {
    const double hf = -std::log(a) + (a + 1.0) / a * kGamma + 1.0;
    const double hw = -std::log(a) + (a - 1.0) / a * kGamma + 1.0;
    const auto fr = MaxStableLaw::frechet(a);
    const auto wb = MaxStableLaw::weibull(a);
    c.near(entropy(fr), hf, 1e-12, "H(Frechet " + num(a) + ")");
    c.near(entropy(wb), hw, 1e-12, "H(Weibull " + num(a) + ")");
    c.near(limit_entropy_by_quadrature(KthExtremeLimit(fr, 1), spec), hf, 1e-7, "quad H(Frechet " + num(a) + ")");
    c.near(limit_entropy_by_quadrature(KthExtremeLimit(wb, 1), spec), hw, 1e-7, "quad H(Weibull " + num(a) + ")");
  }
  c.near(limit_entropy_by_quadrature(KthExtremeLimit(MaxStableLaw::gumbel(), 1), spec), kGamma + 1.0, 1e-7,
         "quad H(Gumbel)");
}

double oracle_entropy(const ParentSpec& p, std::uint64_t n) {
  const double nn = static_cast<double>(n);
  const double base = (nn - 1.0) / nn;
  const double hl = harmonic(n) - std::log(nn);
  switch (p.kind) {
    case ParentKind::Uniform01: return base;
    case ParentKind::Exponential: return base + hl;
    case ParentKind::Pareto: return base - std::log(p.alpha) + (p.alpha + 1.0) / p.alpha * hl;
    case ParentKind::StdNormal: break;
  }
  throw DomainError("no finite-n oracle for the normal parent");
}

void criterion2(Checks& c) {
  const QuadratureSpec spec = tight();
  for (const ParentSpec& p :
       {ParentSpec::uniform01(), ParentSpec::exponential(), ParentSpec::pareto(1.0), ParentSpec::pareto(2.0)}) {
    const NormingSequence norming = closed_form_norming(p);
    for (std::uint64_t n : {1ull, 2ull, 10ull, 100ull, 10000ull}) {
      const FiniteSampleLaw law(p.distribution(), norming, n);
      c.near(entropy_of(law, spec), oracle_entropy(p, n), 1e-6, p.label() + " n=" + std::to_string(n));
    }
  }
}

void criterion3(Checks& c) {
  const QuadratureSpec spec = tight();
  for (const ParentSpec& p : {ParentSpec::pareto(2.0), ParentSpec::uniform01(), ParentSpec::exponential()}) {
    const NormingSequence norming = closed_form_norming(p);
    const KthExtremeLimit limit(p.limit(), 1);
    for (std::uint64_t n : {1ull, 10ull, 100ull, 10000ull}) {
      const FiniteSampleLaw law(p.distribution(), norming, n);
      const double d = kl_of(law, limit, spec);
      const double nn = static_cast<double>(n);
      const std::string tag = p.label() + " n=" + std::to_string(n);
      c.expect(d >= -1e-9, "D < -1e-9 for " + tag);
      if (n <= 100) c.near(d, 1.0 / (nn * (nn + 1.0)), 1e-6, "D " + tag);
      else c.expect(d < 1e-7, "D(" + tag + ") = " + num(d) + " not below 1e-7");
    }
  }
}

std::vector<std::uint64_t> range(std::uint64_t lo, std::uint64_t hi) {
  std::vector<std::uint64_t> g;
  for (std::uint64_t n = lo; n <= hi; ++n) g.push_back(n);
  return g;
}

void criterion4(Checks& c) {
  const QuadratureSpec spec = tight();
  const auto grid = range(2, 100);
  for (const ParentSpec& p : {ParentSpec::pareto(2.0), ParentSpec::uniform01(), ParentSpec::exponential()}) {
    const auto rep = convergence_sweep(p.distribution(), closed_form_norming(p), p.limit(), grid, 1, spec);
    c.expect(rep.monotone_increasing, p.label() + ": H(g_n) not increasing on 2..100");
  }
  const ParentSpec normal = ParentSpec::std_normal();
  const auto rep = convergence_sweep(normal.distribution(), closed_form_norming(normal), normal.limit(), grid, 1, spec);
  std::size_t decreases = 0;
  for (std::size_t i = 1; i < rep.entropy_values.size(); ++i) {
    if (rep.entropy_values[i] < rep.entropy_values[i - 1]) ++decreases;
  }
  c.expect(decreases > 0, "normal: H(g_n) shows no decrease on 2..100");
  c.note("normal decreases: " + std::to_string(decreases));
}

void criterion5(Checks& c) {
  const ParentSpec normal = ParentSpec::std_normal();
  const NormingSequence norming = closed_form_norming(normal);
  double prev = std::numeric_limits<double>::infinity();
  std::string gaps;
  for (std::uint64_t n : {100ull, 1000ull, 10000ull, 100000ull}) {
    const FiniteSampleLaw law(normal.distribution(), norming, n);
    const double gap = std::abs(entropy_of(law, tight()) - (1.0 + kGamma));
    c.expect(gap < prev, "normal gap did not decrease at n=" + std::to_string(n));
    prev = gap;
    gaps += (gaps.empty() ? "" : " ") + num(gap);
  }
  c.note("gaps " + gaps);
}

void criterion6(Checks& c) {
  const QuadratureSpec spec = tight();
  // A(k) = int_0^inf t^(k-1) e^-t log t dt. Relative bound: A(12) ~ 1e8.
  for (std::uint64_t k = 1; k <= 12; ++k) {
    const double km1 = static_cast<double>(k - 1);
    auto f = [km1](double t) {
      if (t <= 0.0) return 0.0;
      const double lt = std::log(t);
      return std::exp(km1 * lt - t) * lt;
    };
    const double hi = km1 + 60.0 + 12.0 * std::sqrt(km1 + 1.0);
    const std::vector<double> breaks{0.0, std::min(1.0, hi), std::max(km1, 1.0) + 1.0, hi,
                                     std::numeric_limits<double>::infinity()};
    const double q = integrate(f, breaks, spec);
    const double want = a_of_k(k);
    c.near(q, want, 1e-8 * std::max(1.0, std::abs(want)), "A(" + std::to_string(k) + ")");
  }
  std::vector<MaxStableLaw> laws{MaxStableLaw::gumbel()};
  for (double a : {0.5, 1.0, 2.0, 5.0}) {
    laws.push_back(MaxStableLaw::frechet(a));
    laws.push_back(MaxStableLaw::weibull(a));
  }
  for (const auto& law : laws) {
    for (std::uint64_t k = 1; k <= 5; ++k) {
      const KthExtremeLimit lim(law, k);
      c.near(limit_entropy_by_quadrature(lim, spec), kth_entropy(lim), 1e-6,
             "H(K_" + std::to_string(k) + ") " + law.label());
    }
  }
  const ParentSpec ex = ParentSpec::exponential();
  for (std::uint64_t k : {2ull, 3ull}) {
    const FiniteSampleLaw law(ex.distribution(), closed_form_norming(ex), 10000, k);
    c.near(entropy_of(law, spec), kth_entropy(KthExtremeLimit(ex.limit(), k)), 5e-3,
           "exponential k=" + std::to_string(k) + " n=1e4");
  }
}

void criterion7(Checks& c, std::uint64_t seed) {
  c.near(harmonic(1'000'000) - std::log(1e6), kGamma, 1e-6, "H_1e6 - log 1e6");
  for (const auto& row : check_lemma2({100, 1000}, 100000, seed)) {
    c.near(row.exact_mean, harmonic(row.n) - std::log(static_cast<double>(row.n)), 1e-12, "exact column");
    c.expect(within_se(row.empirical_mean, row.exact_mean, row.std_error),
             "exponential maxima MC n=" + std::to_string(row.n) + ": " + num(row.empirical_mean) + " vs " +
                 num(row.exact_mean) + " (se " + num(row.std_error) + ")");
    c.note("n=" + std::to_string(row.n) + " z=" + num((row.empirical_mean - row.exact_mean) / row.std_error));
  }
}

void criterion8(Checks& c, std::uint64_t seed) {
  const std::vector<std::pair<ParentSpec, double>> cases{
      {ParentSpec::pareto(3.0), gamma_fn(1.0 - 1.0 / 3.0)},
      {ParentSpec::uniform01(), -gamma_fn(2.0)},
      {ParentSpec::exponential(), kGamma}};
  for (const auto& [p, want] : cases) {
    const auto rows = check_moment_convergence(p.distribution(), closed_form_norming(p), p.limit(), 1, {10000},
                                               100000, seed);
    const auto& r = rows.front();
    c.near(r.limit_moment, want, 1e-12, p.label() + " limit moment");
    c.expect(within_se(r.empirical_moment, want, r.std_error),
             p.label() + ": moment " + num(r.empirical_moment) + " vs " + num(want) + " (se " + num(r.std_error) +
                 ")");
    c.note(p.label() + " z=" + num((r.empirical_moment - want) / r.std_error));
  }
}

void check_verdict(Checks& c, const UnivariateDistribution& d, Verdict want, std::optional<double> alpha) {
  const DomainVerdict v = classify(d);
  c.expect(v.family == want, d.name() + ": verdict " + to_string(v.family) + ", want " + to_string(want));
  if (alpha) {
    const bool ok = v.alpha_estimate && std::abs(*v.alpha_estimate - *alpha) <= 0.02 * *alpha;
    c.expect(ok, d.name() + ": alpha estimate " + (v.alpha_estimate ? num(*v.alpha_estimate) : "none") +
                     ", want " + num(*alpha));
  }
}

void criterion9(Checks& c) {
  const std::vector<std::tuple<ParentSpec, Verdict, std::optional<double>>> cases{
      {ParentSpec::pareto(1.0), Verdict::Frechet, 1.0},
      {ParentSpec::pareto(3.0), Verdict::Frechet, 3.0},
      {ParentSpec::uniform01(), Verdict::Weibull, 1.0},
      {ParentSpec::exponential(), Verdict::Gumbel, std::nullopt},
      {ParentSpec::std_normal(), Verdict::Gumbel, std::nullopt}};
  for (const auto& [p, want, alpha] : cases) {
    check_verdict(c, p.distribution(), want, alpha);
    check_verdict(c, location_scale(p.distribution(), 3.5, 0.25), want, alpha);
    check_verdict(c, location_scale(p.distribution(), -7.0, 40.0), want, alpha);
  }
}

std::vector<std::vector<double>> read_csv(const std::filesystem::path& path, std::vector<std::string>& header) {
  std::ifstream f(path);
  if (!f) throw DomainError("missing " + path.string());
  std::vector<std::vector<double>> rows;
  std::string line;
  bool first = true;
  while (std::getline(f, line)) {
    if (line.empty() || line[0] == '#') {
      if (!line.empty()) throw NumericalError("partial csv " + path.string(), 0, 0);
      continue;
    }
    std::stringstream ss(line);
    std::string cell;
    if (first) {
      while (std::getline(ss, cell, ',')) header.push_back(cell);
      first = false;
      continue;
    }
    std::vector<double> row;
    while (std::getline(ss, cell, ',')) row.push_back(std::strtod(cell.c_str(), nullptr));
    rows.push_back(std::move(row));
  }
  return rows;
}

void criterion10(Checks& c, const std::filesystem::path& scratch) {
  std::ostringstream sink;
  for (const std::string fam : {"pareto", "uniform", "exponential", "normal"}) {
    RunConfig cfg;
    cfg.family = fam;
    cfg.alpha = 2.0;
    cfg.output_dir = scratch / fam;
    cfg.format = OutputFormat::Both;
    const CommandResult curve = cmd_entropy_curve(cfg, sink);
    c.expect(curve.exit_code == kOk, fam + ": entropy-curve exit " + std::to_string(curve.exit_code));
    const CommandResult panel = cmd_density_panel(cfg, sink);
    c.expect(panel.exit_code == kOk, fam + ": density-panel exit " + std::to_string(panel.exit_code));

    std::vector<std::string> header;
    const auto rows = read_csv(cfg.output_dir / "entropy_curve.csv", header);
    c.expect(header == std::vector<std::string>{"n", "H", "Delta", "KL", "limit_H", "gap"}, fam + ": curve header");
    c.expect(rows.size() == 99 && rows.front()[0] == 2 && rows.back()[0] == 100, fam + ": curve grid not 2..100");
    std::vector<double> h;
    for (const auto& r : rows) {
      h.push_back(r[1]);
      c.expect(r[3] >= 0.0, fam + ": negative KL at n=" + num(r[0]));
    }
    const bool increasing = is_monotone_increasing(h, 2.0 * cfg.tolerances.abs_tol);
    if (fam == "normal") c.expect(!increasing, "normal: H column monotone");
    else c.expect(increasing, fam + ": H column not monotone increasing");
    c.expect(rows.back()[5] < rows.front()[5], fam + ": final gap not below first gap");

    std::vector<std::string> ph;
    const auto panel_rows = read_csv(cfg.output_dir / "density_panel.csv", ph);
    const std::size_t curves = fam == "normal" ? 9 : 4;
    c.expect(ph.size() == curves + 2 && ph.back() == "limit", fam + ": density panel columns");
    c.expect(panel_rows.size() == cfg.points, fam + ": density panel rows");
    for (const auto& name : {"entropy_curve.svg", "density_panel.svg"}) {
      c.expect(std::filesystem::file_size(cfg.output_dir / name) > 0, fam + ": empty " + name);
    }
  }
}

double budget_of(int id) {
  switch (id) {
    case 1: return 10;
    case 2: case 3: case 7: return 60;
    case 4: case 6: case 8: return 120;
    case 5: return 180;
    case 9: return 30;
    case 10: return 300;
    default: return 0;
  }
}

const char* name_of(int id) {
  switch (id) {
    case 1: return "limit-entropy closed forms";
    case 2: return "finite-n entropy oracles";
    case 3: return "relative-entropy oracle";
    case 4: return "monotonicity in n";
    case 5: return "normal convergence trend";
    case 6: return "k-th extremes";
    case 7: return "exponential maxima means";
    case 8: return "moment convergence";
    case 9: return "domain classification";
    case 10: return "figure reproduction";
    default: return "unknown";
  }
}

}  // namespace

Suite parse_suite(const std::string& name) {
  if (name == "oracles") return Suite::Oracles;
  if (name == "montecarlo") return Suite::MonteCarlo;
  if (name == "figures") return Suite::Figures;
  if (name == "all") return Suite::All;
  throw DomainError("suite must be oracles, montecarlo, figures or all");
}

std::vector<int> suite_members(Suite suite) {
  switch (suite) {
    case Suite::Oracles: return {1, 2, 3, 6, 9};
    case Suite::MonteCarlo: return {7, 8};
    case Suite::Figures: return {4, 5, 10};
    case Suite::All: break;
  }
  return {1, 2, 3, 4, 5, 6, 7, 8, 9, 10};
}

CriterionResult run_criterion(int id, const std::filesystem::path& scratch, std::uint64_t seed) {
  if (id < 1 || id > 10) throw DomainError("criterion id must be in 1..10");
  CriterionResult r;
  r.id = id;
  r.name = name_of(id);
  r.budget = budget_of(id);
  Checks c;
  const auto t0 = std::chrono::steady_clock::now();
  try {
    switch (id) {
      case 1: criterion1(c); break;
      case 2: criterion2(c); break;
      case 3: criterion3(c); break;
      case 4: criterion4(c); break;
      case 5: criterion5(c); break;
      case 6: criterion6(c); break;
      case 7: criterion7(c, seed); break;
      case 8: criterion8(c, seed); break;
      case 9: criterion9(c); break;
      case 10: criterion10(c, scratch); break;
    }
  } catch (const std::exception& e) {
    c.expect(false, std::string("exception: ") + e.what());
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  c.expect(r.seconds <= r.budget, "runtime " + num(r.seconds) + " s over budget " + num(r.budget) + " s");
  r.passed = c.ok();
  r.detail = c.detail();
  return r;
}

std::vector<CriterionResult> run_suite(Suite suite, std::uint64_t seed,
                                       const std::function<void(const CriterionResult&)>& on_result) {
  const auto scratch = std::filesystem::temp_directory_path() /
                       ("evt_acceptance_" + std::to_string(std::chrono::steady_clock::now().time_since_epoch().count()));
  std::vector<CriterionResult> out;
  for (int id : suite_members(suite)) {
    out.push_back(run_criterion(id, scratch, seed));
    if (on_result) on_result(out.back());
  }
  std::error_code ec;
  std::filesystem::remove_all(scratch, ec);
  return out;
}

}  // namespace evt::cli
