#pragma once

#include <span>
#include <string>

namespace ibc::reports {

struct PlotLabels {
  std::string title;
  std::string x_label;
  std::string y_label;
};

/// Self-contained SVG line plot (axes, ticks, one polyline). Coordinates are
/// written with fixed precision, so equal inputs give byte-identical output.
/// Throws InvalidInput unless xs and ys have equal length >= 2 and finite
/// values.
std::string line_plot_svg(std::span<const double> xs, std::span<const double> ys,
                          const PlotLabels& labels);

}  // namespace ibc::reports
