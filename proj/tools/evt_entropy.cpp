// evt_entropy: entropy of normalized extremes from the command line.
#include <CLI11.hpp>

#include <iostream>

#include "evt/cli/acceptance.hpp"
#include "evt/cli/commands.hpp"
#include "evt/errors.hpp"

namespace {

struct Flags {
  std::string n_grid;
  std::string format = "both";
  std::string out = ".";
};

void add_common(CLI::App* sub, evt::cli::RunConfig& cfg, Flags& flags, bool grid) {
  sub->add_option("--family", cfg.family, "pareto, uniform, exponential or normal")->capture_default_str();
  sub->add_option("--alpha", cfg.alpha, "Pareto tail index / law shape")->capture_default_str();
  sub->add_option("--k", cfg.k, "extreme rank")->capture_default_str();
  if (!grid) return;
  sub->add_option("--n-grid", flags.n_grid, "sample sizes, e.g. 2..100 or 10,100,1000");
  sub->add_option("--abs-tol", cfg.tolerances.abs_tol, "quadrature absolute tolerance")->capture_default_str();
  sub->add_option("--rel-tol", cfg.tolerances.rel_tol, "quadrature relative tolerance")->capture_default_str();
  sub->add_option("--out", flags.out, "output directory")->capture_default_str();
  sub->add_option("--format", flags.format, "csv, svg or both")->capture_default_str();
}

}  // namespace

int main(int argc, char** argv) {
  using namespace evt::cli;
  CLI::App app{"Entropy of normalized maxima and k-th extremes"};
  app.require_subcommand(1);
  RunConfig cfg;
  Flags flags;
  std::uint64_t seed = kDefaultSeed;

  auto* curve = app.add_subcommand("entropy-curve", "H, Delta and KL of g_n over an n grid");
  add_common(curve, cfg, flags, true);
  auto* panel = app.add_subcommand("density-panel", "densities g_n(x) and the limit density");
  add_common(panel, cfg, flags, true);
  panel->add_option("--x-min", cfg.x_min, "left end of the x window");
  panel->add_option("--x-max", cfg.x_max, "right end of the x window");
  panel->add_option("--points", cfg.points, "number of x points")->capture_default_str();
  auto* lim = app.add_subcommand("limit-entropy", "closed-form entropy of the k-th extreme limit law");
  add_common(lim, cfg, flags, false);
  auto* cls = app.add_subcommand("classify", "von Mises domain-of-attraction diagnosis");
  add_common(cls, cfg, flags, false);
  cls->add_option("--loc", cfg.location, "location shift applied to the parent");
  cls->add_option("--scale", cfg.scale, "scale applied to the parent");
  auto* verify = app.add_subcommand("verify", "run the acceptance checks");
  verify->add_option("--suite", cfg.suite, "oracles, montecarlo, figures or all")
      ->check(CLI::IsMember({"oracles", "montecarlo", "figures", "all"}))
      ->capture_default_str();
  auto* seed_opt = verify->add_option("--seed", seed, "Monte Carlo seed");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsageError;
  }

  CommandResult result;
  try {
    if (!flags.n_grid.empty()) cfg.n_grid = parse_n_grid(flags.n_grid);
    cfg.format = parse_format(flags.format);
    cfg.output_dir = flags.out;
    if (seed_opt->count() > 0) cfg.seed = seed;
    if (*curve) result = cmd_entropy_curve(cfg, std::cout);
    else if (*panel) result = cmd_density_panel(cfg, std::cout);
    else if (*lim) result = cmd_limit_entropy(cfg, std::cout);
    else if (*cls) result = cmd_classify(cfg, std::cout);
    else result = cmd_verify(cfg, std::cout);
  } catch (const evt::NumericalError& e) {
    std::cerr << "numerical failure: " << e.what() << '\n';
    return kNumericalFailure;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsageError;
  }
  if (result.exit_code != kOk && !result.message.empty()) std::cerr << result.message << '\n';
  return result.exit_code;
}
