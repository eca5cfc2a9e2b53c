#pragma once

#include <filesystem>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "cartpole/errors.hpp"

namespace cartpole {

struct SvgSeries {
  std::string label;
  std::string color;  // CSS stroke color
  std::vector<std::pair<double, double>> points;
};

// Standalone SVG line chart: axes with tick labels, one polyline per
// series, and a legend when more than one series is present.
void write_line_chart(const std::filesystem::path& path,
                      const std::string& title, const std::string& x_label,
                      const std::string& y_label,
                      std::span<const SvgSeries> series);

}  // namespace cartpole
