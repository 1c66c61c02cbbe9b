// Minimal SVG line and scatter plots.
#pragma once

#include <string>
#include <utility>
#include <vector>

namespace tlent {

struct PlotSeries {
  std::string label;
  std::string color;
  /// Dots when true, otherwise a polyline broken at non-finite or clipped points.
  bool dots = false;
  std::vector<std::pair<double, double>> points;
};

struct PlotSpec {
  std::string title;
  std::string x_label;
  std::string y_label;
  int width = 640;
  int height = 420;
  std::vector<PlotSeries> series;
  /// Index of the series whose y range fixes the view, or -1 for all series.
  int fit_y_to = -1;
};

std::string render_svg(const PlotSpec& spec);

}  // namespace tlent
