#pragma once

#include <cmath>
#include <cstdio>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace combatnet {

// Shortest round-trippable decimal is overkill for tables; ten significant
// digits keep CSVs readable and byte-stable across reruns.
inline std::string format_number(double v) {
  if (std::isnan(v)) return "nan";
  if (v == 0.0) return "0";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.10g", v);
  return buf;
}

inline std::string format_number(const std::optional<double>& v) {
  return v ? format_number(*v) : std::string("null");
}

inline std::vector<std::string> split(std::string_view s, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  for (;;) {
    const auto pos = s.find(sep, start);
    out.emplace_back(s.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

}  // namespace combatnet
