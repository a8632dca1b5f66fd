#pragma once

#include <string>
#include <vector>

#include "ibc/reports/format.hpp"

namespace ibc::reports {

/// g1 = lambda1^-1/2 eta1 for the min-kernel Sobolev space on a uniform grid
/// of [0, 1], the unit-norm density whose functional matches APP_1.
struct DensityTable {
  std::vector<double> x;
  std::vector<double> g;
  double lambda1 = 0.0;
  double integral_g2 = 0.0;    ///< composite Simpson, 1025 nodes
  double endpoint_ratio = 0.0; ///< g(1) / g(0)
  int direction = 0;           ///< +1 strictly increasing, -1 strictly decreasing, 0 neither

  Table as_table() const;
};

/// Throws InvalidParameter for samples < 2.
DensityTable density_table(int samples);

/// CSV and SVG renderings of a density table; pure functions of `samples`.
struct DensityArtifacts {
  DensityTable table;
  std::string csv;
  std::string svg;
};

DensityArtifacts render_density(int samples);

/// Composite Simpson rule on [a, b] with `nodes` points (odd, >= 3).
template <class F>
double simpson(F&& f, double a, double b, int nodes) {
  const int n = nodes - 1;
  const double h = (b - a) / n;
  double s = f(a) + f(b);
  for (int i = 1; i < n; ++i) s += (i % 2 ? 4.0 : 2.0) * f(a + i * h);
  return s * h / 3.0;
}

/// +1 when v is strictly increasing, -1 when strictly decreasing, else 0.
int strict_direction(const std::vector<double>& v);

}  // namespace ibc::reports
