#include "evt/cli/commands.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iomanip>
#include <mutex>
#include <sstream>

#include "evt/classify.hpp"
#include "evt/cli/acceptance.hpp"
#include "evt/cli/csv.hpp"
#include "evt/cli/svg_plot.hpp"
#include "evt/entropy.hpp"
#include "evt/errors.hpp"
#include "evt/finite_sample.hpp"
#include "evt/parallel.hpp"

namespace evt::cli {
namespace {

bool wants_csv(OutputFormat f) { return f != OutputFormat::Svg; }
bool wants_svg(OutputFormat f) { return f != OutputFormat::Csv; }

std::uint64_t parse_count(const std::string& token) {
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(token, &used);
  } catch (const std::exception&) {
    throw DomainError("n grid: cannot parse '" + token + "'");
  }
  if (used != token.size() || !(v >= 1.0) || v != std::floor(v) || v > 1e15) {
    throw DomainError("n grid: '" + token + "' is not a positive integer");
  }
  return static_cast<std::uint64_t>(v);
}

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t");
  if (b == std::string::npos) return "";
  return s.substr(b, s.find_last_not_of(" \t") - b + 1);
}

void write_text(const std::filesystem::path& path, const std::string& text) {
  std::ofstream f(path);
  if (!f) throw DomainError("cannot write " + path.string());
  f << text;
}

ParentSpec parent_of(const RunConfig& c) { return ParentSpec::parse(c.family, c.alpha); }

// The normal's closed-form constants need n >= 2.
void check_grid_for(const ParentSpec& parent, const std::vector<std::uint64_t>& grid) {
  if (parent.kind == ParentKind::StdNormal && !grid.empty() && grid.front() < 2) {
    throw DomainError("normal parent: closed-form norming needs n >= 2");
  }
}

}  // namespace

OutputFormat parse_format(const std::string& s) {
  if (s == "csv") return OutputFormat::Csv;
  if (s == "svg") return OutputFormat::Svg;
  if (s == "both") return OutputFormat::Both;
  throw DomainError("format must be csv, svg or both");
}

std::vector<std::uint64_t> parse_n_grid(const std::string& text) {
  std::vector<std::uint64_t> grid;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item = trim(item);
    if (item.empty()) continue;
    const auto dots = item.find("..");
    if (dots == std::string::npos) {
      grid.push_back(parse_count(item));
      continue;
    }
    const std::uint64_t lo = parse_count(trim(item.substr(0, dots)));
    const std::uint64_t hi = parse_count(trim(item.substr(dots + 2)));
    if (hi < lo) throw DomainError("n grid: empty range '" + item + "'");
    if (hi - lo > 1'000'000) throw DomainError("n grid: range '" + item + "' too long");
    for (std::uint64_t n = lo; n <= hi; ++n) grid.push_back(n);
  }
  if (grid.empty()) throw DomainError("n grid is empty");
  std::sort(grid.begin(), grid.end());
  grid.erase(std::unique(grid.begin(), grid.end()), grid.end());
  return grid;
}

void RunConfig::validate() const {
  for (std::size_t i = 1; i < n_grid.size(); ++i) {
    if (n_grid[i] <= n_grid[i - 1]) throw DomainError("n grid must be strictly increasing");
  }
  if (k == 0) throw DomainError("k must be >= 1");
  tolerances.validate();
  std::error_code ec;
  std::filesystem::create_directories(output_dir, ec);
  if (!std::filesystem::is_directory(output_dir)) {
    throw DomainError("output directory '" + output_dir.string() + "' is not usable");
  }
}

std::vector<std::uint64_t> default_entropy_grid() {
  std::vector<std::uint64_t> g;
  for (std::uint64_t n = 2; n <= 100; ++n) g.push_back(n);
  return g;
}

std::vector<std::uint64_t> default_density_grid(const ParentSpec& parent) {
  const std::uint64_t hi = parent.kind == ParentKind::StdNormal ? 10 : 5;
  std::vector<std::uint64_t> g;
  for (std::uint64_t n = 2; n <= hi; ++n) g.push_back(n);
  return g;
}

CommandResult cmd_entropy_curve(const RunConfig& config, std::ostream& out) {
  config.validate();
  const ParentSpec parent = parent_of(config);
  const std::vector<std::uint64_t> grid = config.n_grid.empty() ? default_entropy_grid() : config.n_grid;
  check_grid_for(parent, grid);
  if (config.k > grid.front()) throw DomainError("k must not exceed the smallest n");
  const NormingSequence norming = closed_form_norming(parent);
  const KthExtremeLimit limit(parent.limit(), config.k);
  const double limit_h = kth_entropy(limit);
  const UnivariateDistribution dist = parent.distribution();

  struct Row {
    bool ok = false;
    double h = 0, delta = 0, kl = 0;
    std::string error;
  };
  std::vector<Row> rows(grid.size());
  parallel_for(grid.size(), [&](std::size_t i) {
    try {
      const FiniteSampleLaw law(dist, norming, grid[i], config.k);
      rows[i].h = entropy_of(law, config.tolerances);
      rows[i].delta = delta_of(law, limit, config.tolerances);
      rows[i].kl = kl_of(law, limit, config.tolerances);
      rows[i].ok = true;
    } catch (const NumericalError& e) {
      rows[i].error = e.what();
    }
  });

  CommandResult result;
  std::size_t complete = 0;
  while (complete < rows.size() && rows[complete].ok) ++complete;

  if (wants_csv(config.format)) {
    const auto path = config.output_dir / "entropy_curve.csv";
    std::ofstream f(path);
    if (!f) throw DomainError("cannot write " + path.string());
    CsvWriter csv(f);
    csv.header({"n", "H", "Delta", "KL", "limit_H", "gap"});
    for (std::size_t i = 0; i < complete; ++i) {
      const Row& r = rows[i];
      csv.row({grid[i], r.h, r.delta, r.kl, limit_h, std::abs(r.h - limit_h)});
    }
    if (complete < rows.size()) {
      csv.comment("partial: quadrature failed at n=" + std::to_string(grid[complete]) + ": " + rows[complete].error);
    }
    result.files.push_back(path);
  }
  if (wants_svg(config.format)) {
    Plot plot;
    plot.title = "Entropy of normalized " + std::string(config.k == 1 ? "maxima" : "k-th extremes") + ", " +
                 parent.label();
    plot.x_label = "n";
    plot.y_label = "nats";
    PlotSeries h{"H(g_n)", {}, {}, true};
    PlotSeries d{"Delta_g(g_n)", {}, {}, false};
    for (std::size_t i = 0; i < complete; ++i) {
      h.xs.push_back(static_cast<double>(grid[i]));
      h.ys.push_back(rows[i].h);
      d.xs.push_back(static_cast<double>(grid[i]));
      d.ys.push_back(rows[i].delta);
    }
    plot.series = {h, d};
    plot.rules = {{"limit H", limit_h}};
    const auto path = config.output_dir / "entropy_curve.svg";
    write_text(path, render_svg(plot));
    result.files.push_back(path);
  }
  if (complete < rows.size()) {
    result.exit_code = kNumericalFailure;
    result.message = "quadrature failed at n=" + std::to_string(grid[complete]) + ": " + rows[complete].error;
    return result;
  }
  out << "entropy curve: " << parent.label() << ", k=" << config.k << ", " << grid.size()
      << " grid points, limit H = " << format_double(limit_h) << '\n';
  for (const auto& p : result.files) out << "wrote " << p.string() << '\n';
  return result;
}

CommandResult cmd_density_panel(const RunConfig& config, std::ostream& out) {
  config.validate();
  const ParentSpec parent = parent_of(config);
  const std::vector<std::uint64_t> grid = config.n_grid.empty() ? default_density_grid(parent) : config.n_grid;
  check_grid_for(parent, grid);
  if (config.k > grid.front()) throw DomainError("k must not exceed the smallest n");
  if (config.points < 2) throw DomainError("need at least two x points");
  const NormingSequence norming = closed_form_norming(parent);
  const UnivariateDistribution dist = parent.distribution();
  const KthExtremeLimit limit(parent.limit(), config.k);

  double x_min = config.x_min;
  double x_max = config.x_max;
  if (std::isnan(x_min) || std::isnan(x_max)) {
    double lo = 0.0, hi = 0.0;
    switch (parent.kind) {
      case ParentKind::Pareto: lo = 0.0; hi = 5.0; break;
      case ParentKind::Uniform01: lo = -5.0; hi = 0.0; break;
      case ParentKind::Exponential: lo = -std::log(static_cast<double>(grid.back())); hi = 5.0; break;
      case ParentKind::StdNormal: lo = -10.0; hi = 10.0; break;
    }
    if (std::isnan(x_min)) x_min = lo;
    if (std::isnan(x_max)) x_max = hi;
  }
  if (!(x_max > x_min)) throw DomainError("x range is empty");

  std::vector<FiniteSampleLaw> laws;
  for (std::uint64_t n : grid) laws.emplace_back(dist, norming, n, config.k);
  std::vector<double> xs(config.points);
  for (std::size_t i = 0; i < config.points; ++i) {
    xs[i] = x_min + (x_max - x_min) * static_cast<double>(i) / static_cast<double>(config.points - 1);
  }

  CommandResult result;
  if (wants_csv(config.format)) {
    const auto path = config.output_dir / "density_panel.csv";
    std::ofstream f(path);
    if (!f) throw DomainError("cannot write " + path.string());
    CsvWriter csv(f);
    std::vector<std::string> header{"x"};
    for (std::uint64_t n : grid) header.push_back("g_" + std::to_string(n));
    header.push_back("limit");
    csv.header(header);
    for (double x : xs) {
      std::vector<CsvCell> row{x};
      for (const auto& law : laws) row.emplace_back(law.density(x));
      row.emplace_back(kth_pdf(limit, x));
      csv.row(row);
    }
    result.files.push_back(path);
  }
  if (wants_svg(config.format)) {
    Plot plot;
    plot.title = "Densities of normalized extremes, " + parent.label();
    plot.x_label = "x";
    plot.y_label = "density";
    for (std::size_t j = 0; j < laws.size(); ++j) {
      PlotSeries s{"n = " + std::to_string(grid[j]), xs, {}, false};
      for (double x : xs) s.ys.push_back(laws[j].density(x));
      plot.series.push_back(std::move(s));
    }
    PlotSeries lim{"limit " + parent.limit().label(), xs, {}, true};
    for (double x : xs) lim.ys.push_back(kth_pdf(limit, x));
    plot.series.push_back(std::move(lim));
    const auto path = config.output_dir / "density_panel.svg";
    write_text(path, render_svg(plot));
    result.files.push_back(path);
  }
  out << "density panel: " << parent.label() << ", " << grid.size() << " curves on [" << format_double(x_min) << ", "
      << format_double(x_max) << "]\n";
  for (const auto& p : result.files) out << "wrote " << p.string() << '\n';
  return result;
}

CommandResult cmd_limit_entropy(const RunConfig& config, std::ostream& out) {
  std::string f = config.family;
  std::transform(f.begin(), f.end(), f.begin(), [](unsigned char c) { return std::tolower(c); });
  std::optional<MaxStableLaw> law;
  if (f == "frechet") law = MaxStableLaw::frechet(config.alpha);
  else if (f == "weibull") law = MaxStableLaw::weibull(config.alpha);
  else if (f == "gumbel") law = MaxStableLaw::gumbel();
  else law = ParentSpec::parse(config.family, config.alpha).limit();
  const KthExtremeLimit lim(*law, config.k);
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12f", kth_entropy(lim));
  out << buf << '\n';
  return {};
}

CommandResult cmd_classify(const RunConfig& config, std::ostream& out) {
  UnivariateDistribution dist = ParentSpec::parse(config.family, config.alpha).distribution();
  if (config.location != 0.0 || config.scale != 1.0) dist = location_scale(dist, config.location, config.scale);
  const DomainVerdict v = classify(dist);
  std::ostringstream line;
  line << to_string(v.family);
  if (v.alpha_estimate) line << " alpha≈" << std::fixed << std::setprecision(2) << *v.alpha_estimate;
  out << line.str() << '\n';
  out << "parent: " << dist.name() << '\n';
  out << "note: " << v.confidence_note << '\n';
  out << "probe,ratio\n";
  for (const auto& [p, r] : v.ratio_trace) out << format_double(p) << ',' << format_double(r) << '\n';
  return {kOk, {}, line.str()};
}

CommandResult cmd_verify(const RunConfig& config, std::ostream& out) {
  const std::vector<CriterionResult> results = run_suite(parse_suite(config.suite), config.seed.value_or(kDefaultSeed));
  bool all = true;
  auto quoted = [](const std::string& text) {
    std::string q = "\"";
    for (char ch : text) q += ch == '"' ? std::string("\"\"") : std::string(1, ch);
    return q + '"';
  };
  out << "criterion,name,status,seconds,budget,detail\n";
  for (const auto& r : results) {
    all = all && r.passed;
    std::ostringstream secs;
    secs << std::fixed << std::setprecision(2) << r.seconds << ',' << std::setprecision(0) << r.budget;
    out << r.id << ',' << quoted(r.name) << ',' << (r.passed ? "PASS" : "FAIL") << ',' << secs.str() << ','
        << quoted(r.detail) << '\n';
  }
  CommandResult res;
  res.exit_code = all ? kOk : kVerificationFailed;
  res.message = all ? "all checks passed" : "verification failed";
  return res;
}

}  // namespace evt::cli
