#include "tlent/plot.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <sstream>

namespace tlent {

namespace {

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  return buf;
}

std::string tick(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.4g", v);
  return buf;
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

struct Range {
  double lo = std::numeric_limits<double>::infinity();
  double hi = -std::numeric_limits<double>::infinity();
  void add(double v) {
    if (!std::isfinite(v)) return;
    lo = std::min(lo, v);
    hi = std::max(hi, v);
  }
  bool empty() const { return !(lo <= hi); }
  void pad(double frac) {
    if (empty()) {
      lo = -1;
      hi = 1;
    }
    double w = hi - lo;
    if (w < 1e-12) w = std::max(1.0, std::abs(lo));
    lo -= frac * w;
    hi += frac * w;
  }
};

}  // namespace

std::string render_svg(const PlotSpec& spec) {
  Range xr, yr;
  for (std::size_t i = 0; i < spec.series.size(); ++i) {
    for (const auto& [x, y] : spec.series[i].points) {
      xr.add(x);
      if (spec.fit_y_to < 0 || static_cast<int>(i) == spec.fit_y_to) yr.add(y);
    }
  }
  xr.pad(0.02);
  yr.pad(0.25);
  const double left = 70, right = 20, top = 40, bottom = 50;
  const double pw = spec.width - left - right, ph = spec.height - top - bottom;
  auto sx = [&](double x) { return left + (x - xr.lo) / (xr.hi - xr.lo) * pw; };
  auto sy = [&](double y) { return top + (yr.hi - y) / (yr.hi - yr.lo) * ph; };
  auto inside = [&](double x, double y) {
    return std::isfinite(x) && std::isfinite(y) && x >= xr.lo && x <= xr.hi && y >= yr.lo && y <= yr.hi;
  };

  std::ostringstream o;
  o << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << spec.width << "\" height=\"" << spec.height
    << "\" font-family=\"sans-serif\" font-size=\"12\">\n";
  o << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  o << "<text x=\"" << num(spec.width / 2.0) << "\" y=\"20\" text-anchor=\"middle\">" << escape(spec.title)
    << "</text>\n";
  o << "<rect x=\"" << num(left) << "\" y=\"" << num(top) << "\" width=\"" << num(pw) << "\" height=\"" << num(ph)
    << "\" fill=\"none\" stroke=\"black\"/>\n";
  constexpr int kTicks = 5;
  for (int i = 0; i <= kTicks; ++i) {
    const double xv = xr.lo + (xr.hi - xr.lo) * i / kTicks;
    const double yv = yr.lo + (yr.hi - yr.lo) * i / kTicks;
    o << "<text x=\"" << num(sx(xv)) << "\" y=\"" << num(top + ph + 16) << "\" text-anchor=\"middle\">"
      << tick(xv) << "</text>\n";
    o << "<text x=\"" << num(left - 6) << "\" y=\"" << num(sy(yv) + 4) << "\" text-anchor=\"end\">" << tick(yv)
      << "</text>\n";
  }
  o << "<text x=\"" << num(left + pw / 2) << "\" y=\"" << num(spec.height - 10.0) << "\" text-anchor=\"middle\">"
    << escape(spec.x_label) << "</text>\n";
  o << "<text x=\"16\" y=\"" << num(top + ph / 2) << "\" text-anchor=\"middle\" transform=\"rotate(-90 16 "
    << num(top + ph / 2) << ")\">" << escape(spec.y_label) << "</text>\n";

  for (const auto& s : spec.series) {
    if (s.dots) {
      for (const auto& [x, y] : s.points) {
        if (!inside(x, y)) continue;
        o << "<circle cx=\"" << num(sx(x)) << "\" cy=\"" << num(sy(y)) << "\" r=\"3\" fill=\"" << s.color
          << "\"/>\n";
      }
      continue;
    }
    std::vector<std::string> run;
    auto flush = [&] {
      if (run.size() >= 2) {
        o << "<polyline fill=\"none\" stroke=\"" << s.color << "\" stroke-width=\"1.5\" points=\"";
        for (std::size_t i = 0; i < run.size(); ++i) o << (i ? " " : "") << run[i];
        o << "\"/>\n";
      }
      run.clear();
    };
    for (const auto& [x, y] : s.points) {
      if (!inside(x, y)) {
        flush();
        continue;
      }
      run.push_back(num(sx(x)) + "," + num(sy(y)));
    }
    flush();
  }
  double ly = top + 14;
  for (const auto& s : spec.series) {
    o << "<text x=\"" << num(left + pw - 8) << "\" y=\"" << num(ly) << "\" text-anchor=\"end\" fill=\"" << s.color
      << "\">" << escape(s.label) << "</text>\n";
    ly += 14;
  }
  o << "</svg>\n";
  return o.str();
}

}  // namespace tlent
