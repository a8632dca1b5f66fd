#include "ibc/reports/plot.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "ibc/errors.hpp"
#include "ibc/reports/format.hpp"

namespace ibc::reports {
namespace {

constexpr double kWidth = 640.0;
constexpr double kHeight = 420.0;
constexpr double kLeft = 70.0;
constexpr double kRight = 20.0;
constexpr double kTop = 40.0;
constexpr double kBottom = 50.0;
constexpr int kTicks = 5;

std::string escape(const std::string& s) {
  std::string out;
  for (const char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

}  // namespace

std::string line_plot_svg(std::span<const double> xs, std::span<const double> ys,
                          const PlotLabels& labels) {
  if (xs.size() != ys.size() || xs.size() < 2) {
    throw InvalidInput("line_plot_svg: need equal-length data with at least 2 points");
  }
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (!std::isfinite(xs[i]) || !std::isfinite(ys[i])) {
      throw InvalidInput("line_plot_svg: non-finite data");
    }
  }
  const auto [xmin_it, xmax_it] = std::minmax_element(xs.begin(), xs.end());
  const auto [ymin_it, ymax_it] = std::minmax_element(ys.begin(), ys.end());
  double x0 = *xmin_it, x1 = *xmax_it, y0 = *ymin_it, y1 = *ymax_it;
  if (x1 == x0) x1 = x0 + 1.0;
  // Pad the y range by 5% so the curve does not touch the frame.
  const double pad = y1 > y0 ? 0.05 * (y1 - y0) : 0.5;
  y0 -= pad;
  y1 += pad;

  const double pw = kWidth - kLeft - kRight;
  const double ph = kHeight - kTop - kBottom;
  const auto sx = [&](double x) { return kLeft + (x - x0) / (x1 - x0) * pw; };
  const auto sy = [&](double y) { return kTop + (y1 - y) / (y1 - y0) * ph; };
  const auto f2 = [](double v) { return format_fixed(v, 2); };

  std::ostringstream os;
  os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
     << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << f2(kWidth) << "\" height=\""
     << f2(kHeight) << "\" viewBox=\"0 0 " << f2(kWidth) << ' ' << f2(kHeight) << "\">\n"
     << "<rect x=\"0\" y=\"0\" width=\"" << f2(kWidth) << "\" height=\"" << f2(kHeight)
     << "\" fill=\"white\"/>\n";
  os << "<text x=\"" << f2(kWidth / 2) << "\" y=\"24\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"15\">"
     << escape(labels.title) << "</text>\n";
  os << "<rect x=\"" << f2(kLeft) << "\" y=\"" << f2(kTop) << "\" width=\"" << f2(pw)
     << "\" height=\"" << f2(ph) << "\" fill=\"none\" stroke=\"black\" stroke-width=\"1\"/>\n";

  os << "<g font-family=\"sans-serif\" font-size=\"11\" stroke=\"#dddddd\">\n";
  for (int i = 0; i <= kTicks; ++i) {
    const double t = static_cast<double>(i) / kTicks;
    const double xv = x0 + t * (x1 - x0);
    const double yv = y0 + t * (y1 - y0);
    os << "<line x1=\"" << f2(sx(xv)) << "\" y1=\"" << f2(kTop) << "\" x2=\"" << f2(sx(xv))
       << "\" y2=\"" << f2(kTop + ph) << "\"/>\n";
    os << "<line x1=\"" << f2(kLeft) << "\" y1=\"" << f2(sy(yv)) << "\" x2=\"" << f2(kLeft + pw)
       << "\" y2=\"" << f2(sy(yv)) << "\"/>\n";
    os << "<text stroke=\"none\" fill=\"black\" x=\"" << f2(sx(xv)) << "\" y=\""
       << f2(kTop + ph + 16) << "\" text-anchor=\"middle\">" << format_fixed(xv, 2) << "</text>\n";
    os << "<text stroke=\"none\" fill=\"black\" x=\"" << f2(kLeft - 6) << "\" y=\""
       << f2(sy(yv) + 4) << "\" text-anchor=\"end\">" << format_fixed(yv, 3) << "</text>\n";
  }
  os << "</g>\n";
  os << "<text x=\"" << f2(kLeft + pw / 2) << "\" y=\"" << f2(kHeight - 10)
     << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"13\">"
     << escape(labels.x_label) << "</text>\n";
  os << "<text x=\"16\" y=\"" << f2(kTop + ph / 2) << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"13\" transform=\"rotate(-90 16 "
     << f2(kTop + ph / 2) << ")\">" << escape(labels.y_label) << "</text>\n";

  os << "<polyline fill=\"none\" stroke=\"#1f4e9c\" stroke-width=\"2\" points=\"";
  for (std::size_t i = 0; i < xs.size(); ++i) {
    os << (i ? " " : "") << format_fixed(sx(xs[i]), 3) << ',' << format_fixed(sy(ys[i]), 3);
  }
  os << "\"/>\n</svg>\n";
  return os.str();
}

}  // namespace ibc::reports
