#pragma once

#include <cstdint>
#include <filesystem>
#include <functional>
#include <string>
#include <vector>

namespace evt::cli {

struct CriterionResult {
  int id = 0;
  std::string name;
  bool passed = false;
  std::string detail;
  double seconds = 0.0;
  double budget = 0.0;  // seconds
};

enum class Suite { Oracles, MonteCarlo, Figures, All };

/// "oracles", "montecarlo", "figures", "all"; throws DomainError otherwise.
[[nodiscard]] Suite parse_suite(const std::string& name);

/// Criterion ids belonging to a suite, ascending.
[[nodiscard]] std::vector<int> suite_members(Suite suite);

inline constexpr std::uint64_t kDefaultSeed = 20240101;

/// Runs one acceptance criterion (1..10). Exceeding the runtime budget counts
/// as a failure. `scratch` receives the CSV/SVG files of criterion 10; `seed`
/// drives the Monte Carlo criteria.
[[nodiscard]] CriterionResult run_criterion(int id, const std::filesystem::path& scratch,
                                            std::uint64_t seed = kDefaultSeed);

/// Runs every member of `suite`, calling `on_result` after each one.
[[nodiscard]] std::vector<CriterionResult> run_suite(
    Suite suite, std::uint64_t seed = kDefaultSeed,
    const std::function<void(const CriterionResult&)>& on_result = {});

}  // namespace evt::cli
