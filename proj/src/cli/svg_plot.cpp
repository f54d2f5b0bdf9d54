#include "evt/cli/svg_plot.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <sstream>

#include "evt/cli/csv.hpp"

namespace evt::cli {
namespace {

constexpr std::array<const char*, 8> kPalette = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd",
                                                 "#ff7f0e", "#8c564b", "#e377c2", "#17becf"};

struct Range {
  double lo = std::numeric_limits<double>::infinity();
  double hi = -std::numeric_limits<double>::infinity();
  void add(double v) {
    if (!std::isfinite(v)) return;
    lo = std::min(lo, v);
    hi = std::max(hi, v);
  }
  void finish() {
    if (!std::isfinite(lo)) {
      lo = 0.0;
      hi = 1.0;
    }
    if (hi - lo <= 0.0) {
      const double pad = std::max(1e-12, std::abs(lo) * 0.05 + 0.5);
      lo -= pad;
      hi += pad;
    }
  }
};

// Tick step from {1, 2, 5} x 10^m giving about `target` ticks.
double nice_step(double span, int target) {
  const double raw = span / target;
  const double mag = std::pow(10.0, std::floor(std::log10(raw)));
  for (double m : {1.0, 2.0, 5.0, 10.0}) {
    if (m * mag >= raw) return m * mag;
  }
  return 10.0 * mag;
}

std::string escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '&': out += "&amp;"; break;
      default: out += c;
    }
  }
  return out;
}

std::string tick_label(double v, double step) {
  std::ostringstream os;
  const int decimals = std::max(0, static_cast<int>(-std::floor(std::log10(step))));
  os.setf(std::ios::fixed);
  os.precision(std::min(decimals, 8));
  os << (std::abs(v) < step * 1e-9 ? 0.0 : v);
  return os.str();
}

}  // namespace

std::string render_svg(const Plot& plot) {
  Range xr;
  Range yr;
  for (const auto& s : plot.series) {
    for (std::size_t i = 0; i < s.xs.size() && i < s.ys.size(); ++i) {
      if (std::isfinite(s.xs[i]) && std::isfinite(s.ys[i])) {
        xr.add(s.xs[i]);
        yr.add(s.ys[i]);
      }
    }
  }
  for (const auto& r : plot.rules) yr.add(r.y);
  xr.finish();
  yr.finish();
  const double ypad = 0.05 * (yr.hi - yr.lo);
  yr.lo -= ypad;
  yr.hi += ypad;

  const double left = 70, right = 20, top = 40, bottom = 55;
  const double pw = plot.width - left - right;
  const double ph = plot.height - top - bottom;
  auto px = [&](double x) { return left + (x - xr.lo) / (xr.hi - xr.lo) * pw; };
  auto py = [&](double y) { return top + (yr.hi - y) / (yr.hi - yr.lo) * ph; };

  std::ostringstream os;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << plot.width << "\" height=\"" << plot.height
     << "\" font-family=\"sans-serif\" font-size=\"12\">\n";
  os << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  os << "<text x=\"" << plot.width / 2 << "\" y=\"22\" text-anchor=\"middle\" font-size=\"15\">"
     << escape(plot.title) << "</text>\n";
  os << "<rect x=\"" << left << "\" y=\"" << top << "\" width=\"" << pw << "\" height=\"" << ph
     << "\" fill=\"none\" stroke=\"black\"/>\n";

  const double xs = nice_step(xr.hi - xr.lo, 8);
  for (double t = std::ceil(xr.lo / xs) * xs; t <= xr.hi + 1e-9 * xs; t += xs) {
    os << "<line x1=\"" << px(t) << "\" y1=\"" << top + ph << "\" x2=\"" << px(t) << "\" y2=\"" << top + ph + 5
       << "\" stroke=\"black\"/>\n";
    os << "<text x=\"" << px(t) << "\" y=\"" << top + ph + 18 << "\" text-anchor=\"middle\">"
       << tick_label(t, xs) << "</text>\n";
  }
  const double ys = nice_step(yr.hi - yr.lo, 6);
  for (double t = std::ceil(yr.lo / ys) * ys; t <= yr.hi + 1e-9 * ys; t += ys) {
    os << "<line x1=\"" << left - 5 << "\" y1=\"" << py(t) << "\" x2=\"" << left << "\" y2=\"" << py(t)
       << "\" stroke=\"black\"/>\n";
    os << "<text x=\"" << left - 8 << "\" y=\"" << py(t) + 4 << "\" text-anchor=\"end\">" << tick_label(t, ys)
       << "</text>\n";
  }
  os << "<text x=\"" << left + pw / 2 << "\" y=\"" << plot.height - 12 << "\" text-anchor=\"middle\">"
     << escape(plot.x_label) << "</text>\n";
  os << "<text transform=\"translate(16," << top + ph / 2 << ") rotate(-90)\" text-anchor=\"middle\">"
     << escape(plot.y_label) << "</text>\n";

  std::size_t legend_row = 0;
  auto legend = [&](const std::string& label, const char* color, const char* dash) {
    const double ly = top + 14 + 16.0 * static_cast<double>(legend_row++);
    const double lx = left + pw - 150;
    os << "<line x1=\"" << lx << "\" y1=\"" << ly << "\" x2=\"" << lx + 24 << "\" y2=\"" << ly << "\" stroke=\""
       << color << "\" stroke-width=\"2\"" << dash << "/>\n";
    os << "<text x=\"" << lx + 30 << "\" y=\"" << ly + 4 << "\">" << escape(label) << "</text>\n";
  };

  for (std::size_t i = 0; i < plot.series.size(); ++i) {
    const auto& s = plot.series[i];
    const char* color = kPalette[i % kPalette.size()];
    const char* dash = s.dashed ? " stroke-dasharray=\"6,4\"" : "";
    std::ostringstream pts;
    auto flush = [&] {
      if (!pts.str().empty()) {
        os << "<polyline fill=\"none\" stroke=\"" << color << "\" stroke-width=\"1.6\"" << dash << " points=\""
           << pts.str() << "\"/>\n";
        pts.str("");
      }
    };
    for (std::size_t j = 0; j < s.xs.size() && j < s.ys.size(); ++j) {
      if (!std::isfinite(s.xs[j]) || !std::isfinite(s.ys[j])) {
        flush();
        continue;
      }
      pts << px(s.xs[j]) << ',' << py(s.ys[j]) << ' ';
    }
    flush();
    legend(s.label, color, dash);
  }
  for (const auto& r : plot.rules) {
    os << "<line x1=\"" << left << "\" y1=\"" << py(r.y) << "\" x2=\"" << left + pw << "\" y2=\"" << py(r.y)
       << "\" stroke=\"gray\" stroke-dasharray=\"2,3\"/>\n";
    legend(r.label + " = " + format_double(r.y), "gray", " stroke-dasharray=\"2,3\"");
  }
  os << "</svg>\n";
  return os.str();
}

}  // namespace evt::cli
