#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "combatnet/csv.hpp"

namespace combatnet {

struct Series {
  std::string label;
  std::vector<std::pair<double, double>> points;
};

namespace detail {

inline std::string svg_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      default: out += c;
    }
  }
  return out;
}

inline std::string fixed(double v, int digits = 1) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.*f", digits, v);
  return buf;
}

}  // namespace detail

// Static line chart with axes, five ticks per axis and a legend.
inline void write_line_chart(std::ostream& os, const std::string& title, const std::string& xlabel,
                             const std::string& ylabel, const std::vector<Series>& series) {
  constexpr double W = 640, H = 420, left = 64, right = 150, top = 36, bottom = 48;
  static const std::array<const char*, 8> palette = {"#1f77b4", "#d62728", "#2ca02c", "#ff7f0e",
                                                     "#9467bd", "#8c564b", "#e377c2", "#7f7f7f"};
  double x0 = std::numeric_limits<double>::infinity(), x1 = -x0, y0 = x0, y1 = -x0;
  for (const auto& s : series)
    for (const auto& [x, y] : s.points) {
      x0 = std::min(x0, x);
      x1 = std::max(x1, x);
      y0 = std::min(y0, y);
      y1 = std::max(y1, y);
    }
  if (!std::isfinite(x0)) x0 = 0, x1 = 1, y0 = 0, y1 = 1;
  if (x1 == x0) x1 = x0 + 1;
  if (y1 == y0) y1 = y0 + 1;
  const double pw = W - left - right, ph = H - top - bottom;
  auto sx = [&](double x) { return left + (x - x0) / (x1 - x0) * pw; };
  auto sy = [&](double y) { return top + ph - (y - y0) / (y1 - y0) * ph; };

  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << W << "\" height=\"" << H
     << "\" font-family=\"sans-serif\" font-size=\"11\">\n";
  os << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  os << "<text x=\"" << W / 2 << "\" y=\"20\" text-anchor=\"middle\" font-size=\"13\">" << detail::svg_escape(title)
     << "</text>\n";
  os << "<path d=\"M" << left << ',' << top << " V" << top + ph << " H" << left + pw
     << "\" fill=\"none\" stroke=\"black\"/>\n";
  for (int i = 0; i <= 4; ++i) {
    const double fx = x0 + (x1 - x0) * i / 4.0, fy = y0 + (y1 - y0) * i / 4.0;
    os << "<text x=\"" << detail::fixed(sx(fx)) << "\" y=\"" << top + ph + 16 << "\" text-anchor=\"middle\">"
       << format_number(std::round(fx * 1000) / 1000) << "</text>\n";
    os << "<text x=\"" << left - 6 << "\" y=\"" << detail::fixed(sy(fy) + 4) << "\" text-anchor=\"end\">"
       << format_number(std::round(fy * 1000) / 1000) << "</text>\n";
  }
  os << "<text x=\"" << left + pw / 2 << "\" y=\"" << H - 10 << "\" text-anchor=\"middle\">"
     << detail::svg_escape(xlabel) << "</text>\n";
  os << "<text transform=\"translate(16," << top + ph / 2 << ") rotate(-90)\" text-anchor=\"middle\">"
     << detail::svg_escape(ylabel) << "</text>\n";
  for (std::size_t k = 0; k < series.size(); ++k) {
    const char* color = palette[k % palette.size()];
    if (!series[k].points.empty()) {
      os << "<polyline fill=\"none\" stroke=\"" << color << "\" stroke-width=\"1.5\" points=\"";
      for (const auto& [x, y] : series[k].points) os << detail::fixed(sx(x)) << ',' << detail::fixed(sy(y)) << ' ';
      os << "\"/>\n";
    }
    const double ly = top + 12 + 16.0 * static_cast<double>(k);
    os << "<line x1=\"" << W - right + 12 << "\" y1=\"" << ly << "\" x2=\"" << W - right + 32 << "\" y2=\"" << ly
       << "\" stroke=\"" << color << "\" stroke-width=\"2\"/>\n";
    os << "<text x=\"" << W - right + 38 << "\" y=\"" << ly + 4 << "\">" << detail::svg_escape(series[k].label)
       << "</text>\n";
  }
  os << "</svg>\n";
}

}  // namespace combatnet
