#pragma once

#include <string>
#include <vector>

namespace evt::cli {

struct PlotSeries {
  std::string label;
  std::vector<double> xs;
  std::vector<double> ys;
  bool dashed = false;
};

struct HorizontalRule {
  std::string label;
  double y;
};

struct Plot {
  std::string title;
  std::string x_label;
  std::string y_label;
  std::vector<PlotSeries> series;
  std::vector<HorizontalRule> rules;
  int width = 720;
  int height = 480;
};

/// Static SVG: axes with ticks, one polyline per series, dotted horizontal
/// rules and a legend. Non-finite points break a polyline.
[[nodiscard]] std::string render_svg(const Plot& plot);

}  // namespace evt::cli
