#include "monospec/plot.hpp"

#include <algorithm>
#include <array>
#include <cstdio>
#include <ostream>
#include <string>

namespace monospec {

namespace {

constexpr double kSize = 480.0;
constexpr double kPad = 40.0;
constexpr std::array<const char*, 6> kPalette = {"#d62728", "#1f77b4", "#2ca02c",
                                                 "#9467bd", "#ff7f0e", "#8c564b"};

struct Frame {
  double x0 = -1.1, x1 = 1.1, y0 = -1.1, y1 = 1.1;

  double sx(double x) const { return kPad + (x - x0) / (x1 - x0) * (kSize - 2 * kPad); }
  double sy(double y) const { return kSize - kPad - (y - y0) / (y1 - y0) * (kSize - 2 * kPad); }
};

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  return buf;
}

std::vector<std::pair<double, double>> points_of(const Dataset& ds) {
  std::vector<std::pair<double, double>> pts;
  for (const auto& r : ds.records) {
    if (ds.plane == PlotPlane::Pair) {
      if (r.spectrum.size() >= 2) pts.emplace_back(r.spectrum[0].real(), r.spectrum[1].real());
    } else {
      for (const Complex& z : r.spectrum) pts.emplace_back(z.real(), z.imag());
    }
  }
  return pts;
}

}  // namespace

void write_svg(std::ostream& os, const Dataset& ds) {
  const Frame f;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kSize << "\" height=\"" << kSize
     << "\" viewBox=\"0 0 " << kSize << ' ' << kSize << "\">\n";
  os << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  os << "<g stroke=\"#888\" stroke-width=\"1\">\n";
  os << "<line x1=\"" << fmt(f.sx(f.x0)) << "\" y1=\"" << fmt(f.sy(0)) << "\" x2=\"" << fmt(f.sx(f.x1))
     << "\" y2=\"" << fmt(f.sy(0)) << "\"/>\n";
  os << "<line x1=\"" << fmt(f.sx(0)) << "\" y1=\"" << fmt(f.sy(f.y0)) << "\" x2=\"" << fmt(f.sx(0))
     << "\" y2=\"" << fmt(f.sy(f.y1)) << "\"/>\n";
  for (double t : {-1.0, -0.5, 0.5, 1.0}) {
    os << "<line x1=\"" << fmt(f.sx(t)) << "\" y1=\"" << fmt(f.sy(0) - 3) << "\" x2=\"" << fmt(f.sx(t))
       << "\" y2=\"" << fmt(f.sy(0) + 3) << "\"/>\n";
    os << "<line x1=\"" << fmt(f.sx(0) - 3) << "\" y1=\"" << fmt(f.sy(t)) << "\" x2=\"" << fmt(f.sx(0) + 3)
       << "\" y2=\"" << fmt(f.sy(t)) << "\"/>\n";
  }
  os << "</g>\n";
  const char* xlabel = ds.plane == PlotPlane::Pair ? "lambda2" : "Re";
  const char* ylabel = ds.plane == PlotPlane::Pair ? "lambda3" : "Im";
  os << "<text x=\"" << fmt(kSize - kPad) << "\" y=\"" << fmt(f.sy(0) - 6)
     << "\" font-size=\"11\" text-anchor=\"end\">" << xlabel << "</text>\n";
  os << "<text x=\"" << fmt(f.sx(0) + 6) << "\" y=\"" << fmt(kPad - 6) << "\" font-size=\"11\">" << ylabel
     << "</text>\n";

  os << "<g fill=\"#333\" fill-opacity=\"0.35\">\n";
  for (const auto& [x, y] : points_of(ds)) {
    os << "<circle cx=\"" << fmt(f.sx(x)) << "\" cy=\"" << fmt(f.sy(y)) << "\" r=\"1\"/>\n";
  }
  os << "</g>\n";

  for (std::size_t k = 0; k < ds.curves.size(); ++k) {
    const auto& c = ds.curves[k];
    os << "<" << (c.closed ? "polygon" : "polyline") << " fill=\"none\" stroke=\""
       << kPalette[k % kPalette.size()] << "\" stroke-width=\"1.5\" points=\"";
    for (std::size_t i = 0; i < c.points.size(); ++i) {
      os << (i ? " " : "") << fmt(f.sx(c.points[i].first)) << ',' << fmt(f.sy(c.points[i].second));
    }
    os << "\"><title>" << c.name << "</title></" << (c.closed ? "polygon" : "polyline") << ">\n";
  }
  os << "<text x=\"" << fmt(kPad) << "\" y=\"" << fmt(kPad / 2) << "\" font-size=\"13\">" << ds.name
     << "</text>\n";
  os << "</svg>\n";
}

}  // namespace monospec
