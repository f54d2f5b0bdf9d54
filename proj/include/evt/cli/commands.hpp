#pragma once

#include <cstdint>
#include <filesystem>
#include <limits>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "evt/norming.hpp"
#include "evt/quadrature.hpp"

namespace evt::cli {

enum ExitCode : int { kOk = 0, kVerificationFailed = 1, kUsageError = 2, kNumericalFailure = 3 };

enum class OutputFormat { Csv, Svg, Both };

[[nodiscard]] OutputFormat parse_format(const std::string& s);

/// "2..100", "2,4,8", "10,100..103" -> sorted list. Entries may use
/// exponent notation ("1e4") as long as they are integral.
[[nodiscard]] std::vector<std::uint64_t> parse_n_grid(const std::string& text);

struct RunConfig {
  std::string command;
  std::string family = "pareto";
  double alpha = 2.0;
  std::vector<std::uint64_t> n_grid;  // empty: the command's default
  std::uint64_t k = 1;
  QuadratureSpec tolerances;
  std::filesystem::path output_dir = ".";
  OutputFormat format = OutputFormat::Both;
  std::optional<std::uint64_t> seed;
  std::string suite = "all";
  // density panel window; NaN picks the family default
  double x_min = std::numeric_limits<double>::quiet_NaN();
  double x_max = std::numeric_limits<double>::quiet_NaN();
  std::size_t points = 401;
  // classify: optional location-scale wrapping of the parent
  double location = 0.0;
  double scale = 1.0;

  /// Throws DomainError for a non-increasing grid or an unusable output dir.
  void validate() const;
};

struct CommandResult {
  int exit_code = kOk;
  std::vector<std::filesystem::path> files;
  std::string message;
};

/// Default n grid for entropy curves: 2..100.
[[nodiscard]] std::vector<std::uint64_t> default_entropy_grid();
/// Default n grid for density panels: 2..5, or 2..10 for the normal parent.
[[nodiscard]] std::vector<std::uint64_t> default_density_grid(const ParentSpec& parent);

/// entropy_curve.csv: n,H,Delta,KL,limit_H,gap (+ entropy_curve.svg).
[[nodiscard]] CommandResult cmd_entropy_curve(const RunConfig& config, std::ostream& out);

/// density_panel.csv: x,g_<n>...,limit (+ density_panel.svg).
[[nodiscard]] CommandResult cmd_density_panel(const RunConfig& config, std::ostream& out);

/// Prints the closed-form entropy of K_k with 12 decimals. `family` may name
/// a law (frechet, weibull, gumbel) or a parent whose limit is meant.
[[nodiscard]] CommandResult cmd_limit_entropy(const RunConfig& config, std::ostream& out);

/// Prints the domain verdict and its ratio trace.
[[nodiscard]] CommandResult cmd_classify(const RunConfig& config, std::ostream& out);

/// Runs a verification suite (oracles, montecarlo, figures, all) and prints
/// one line per check. Exit 0 iff everything passed.
[[nodiscard]] CommandResult cmd_verify(const RunConfig& config, std::ostream& out);

}  // namespace evt::cli
