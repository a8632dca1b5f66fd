#include "ibc/reports/density.hpp"

#include <cmath>
#include <sstream>

#include "ibc/errors.hpp"
#include "ibc/reports/plot.hpp"
#include "ibc/root_eigensolver.hpp"

namespace ibc::reports {

int strict_direction(const std::vector<double>& v) {
  if (v.size() < 2) return 0;
  bool up = true, down = true;
  for (std::size_t i = 1; i < v.size(); ++i) {
    up = up && v[i] > v[i - 1];
    down = down && v[i] < v[i - 1];
  }
  return up ? 1 : (down ? -1 : 0);
}

DensityTable density_table(int samples) {
  if (samples < 2) throw InvalidParameter("density: samples must be >= 2");
  const Eigenpair top = sobolev_min_eigenpair(1);
  const double scale = 1.0 / std::sqrt(top.value);
  const auto g = [&](double x) { return scale * top.eigenfunction(x); };

  DensityTable out;
  out.lambda1 = top.value;
  out.x.reserve(static_cast<std::size_t>(samples));
  out.g.reserve(static_cast<std::size_t>(samples));
  for (int i = 0; i < samples; ++i) {
    const double x = static_cast<double>(i) / (samples - 1);
    out.x.push_back(x);
    out.g.push_back(g(x));
  }
  out.integral_g2 = simpson([&](double x) { return g(x) * g(x); }, 0.0, 1.0, 1025);
  out.endpoint_ratio = g(1.0) / g(0.0);
  out.direction = strict_direction(out.g);
  return out;
}

Table DensityTable::as_table() const {
  Table t({"x", "g1"});
  for (std::size_t i = 0; i < x.size(); ++i) t.add_row({format_number(x[i]), format_number(g[i])});
  return t;
}

DensityArtifacts render_density(int samples) {
  DensityArtifacts out{density_table(samples), {}, {}};
  std::ostringstream csv;
  out.table.as_table().write_csv(csv);
  out.csv = csv.str();
  out.svg = line_plot_svg(out.table.x, out.table.g,
                          {"Density g1 with ||I_g|| = ||APP_1||", "x", "g1(x)"});
  return out;
}

}  // namespace ibc::reports
