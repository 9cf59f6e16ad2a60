#pragma once

#include <array>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace pham {

struct ChartSeries {
  std::string label;
  std::vector<std::array<double, 2>> points;  // (x, y)
};

/// Renders an 800x600 SVG 1.1 line chart: 60 px margins, linear axes with
/// tick labels, a dashed zero line when y = 0 is in range, one polyline per
/// series, and a legend. A nonempty `metadata` string is embedded as an XML
/// comment. Output bytes depend only on the input.
std::string render_line_chart(std::span<const ChartSeries> series,
                              std::string_view x_label,
                              std::string_view y_label,
                              std::string_view metadata = {});

}  // namespace pham
