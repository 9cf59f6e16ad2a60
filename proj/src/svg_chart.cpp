#include "pham/svg_chart.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>

#include "pham/errors.hpp"

namespace pham {

namespace {

constexpr double kWidth = 800.0;
constexpr double kHeight = 600.0;
constexpr double kMargin = 60.0;

constexpr const char* kPalette[] = {"#1f77b4", "#d62728", "#2ca02c",
                                    "#9467bd", "#ff7f0e", "#8c564b",
                                    "#e377c2", "#7f7f7f"};

std::string fmt(const char* spec, double v) {
  char buf[48];
  std::snprintf(buf, sizeof buf, spec, v);
  return buf;
}

// Largest "nice" tick step (1, 2, or 5 times a power of ten) that yields at
// most ~6 ticks over the range.
double nice_step(double range) {
  const double raw = range / 6.0;
  const double mag = std::pow(10.0, std::floor(std::log10(raw)));
  const double frac = raw / mag;
  double nice = 10.0;
  if (frac <= 1.0) {
    nice = 1.0;
  } else if (frac <= 2.0) {
    nice = 2.0;
  } else if (frac <= 5.0) {
    nice = 5.0;
  }
  return nice * mag;
}

std::string xml_escape(std::string_view s) {
  std::string out;
  out.reserve(s.size());
  for (char c : s) {
    switch (c) {
      case '&':
        out += "&amp;";
        break;
      case '<':
        out += "&lt;";
        break;
      case '>':
        out += "&gt;";
        break;
      default:
        out += c;
    }
  }
  return out;
}

}  // namespace

std::string render_line_chart(std::span<const ChartSeries> series,
                              std::string_view x_label,
                              std::string_view y_label,
                              std::string_view metadata) {
  if (series.empty()) {
    throw ArgumentOutOfRange("chart needs at least one series");
  }

  double x_min = std::numeric_limits<double>::infinity();
  double x_max = -x_min;
  double y_min = x_min;
  double y_max = -x_min;
  for (const auto& s : series) {
    for (const auto& [x, y] : s.points) {
      x_min = std::min(x_min, x);
      x_max = std::max(x_max, x);
      y_min = std::min(y_min, y);
      y_max = std::max(y_max, y);
    }
  }
  if (!(x_min < x_max)) {
    throw ArgumentOutOfRange("chart needs a nonempty x range");
  }
  if (y_min == y_max) {
    y_min -= 1.0;
    y_max += 1.0;
  }
  const double y_pad = 0.05 * (y_max - y_min);
  y_min -= y_pad;
  y_max += y_pad;

  const double px0 = kMargin, px1 = kWidth - kMargin;
  const double py0 = kHeight - kMargin, py1 = kMargin;  // y grows upward
  const auto sx = [&](double x) {
    return px0 + (x - x_min) / (x_max - x_min) * (px1 - px0);
  };
  const auto sy = [&](double y) {
    return py0 + (y - y_min) / (y_max - y_min) * (py1 - py0);
  };

  std::string svg;
  svg += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  svg +=
      "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" "
      "width=\"800\" height=\"600\" viewBox=\"0 0 800 600\">\n";
  if (!metadata.empty()) {
    svg += "<!-- " + xml_escape(metadata) + " -->\n";
  }
  svg += "<rect x=\"0\" y=\"0\" width=\"800\" height=\"600\" fill=\"white\"/>\n";

  // Axis ticks and grid.
  const double xstep = nice_step(x_max - x_min);
  const double ystep = nice_step(y_max - y_min);
  for (double x = std::ceil(x_min / xstep) * xstep; x <= x_max + 1e-12;
       x += xstep) {
    const std::string px = fmt("%.2f", sx(x));
    svg += "<line x1=\"" + px + "\" y1=\"" + fmt("%.2f", py0) + "\" x2=\"" +
           px + "\" y2=\"" + fmt("%.2f", py0 + 5) +
           "\" stroke=\"black\" stroke-width=\"1\"/>\n";
    svg += "<text x=\"" + px + "\" y=\"" + fmt("%.2f", py0 + 20) +
           "\" font-family=\"monospace\" font-size=\"12\" "
           "text-anchor=\"middle\">" +
           fmt("%.4g", x == 0.0 ? 0.0 : x) + "</text>\n";
  }
  for (double y = std::ceil(y_min / ystep) * ystep; y <= y_max + 1e-12;
       y += ystep) {
    const std::string py = fmt("%.2f", sy(y));
    svg += "<line x1=\"" + fmt("%.2f", px0 - 5) + "\" y1=\"" + py + "\" x2=\"" +
           fmt("%.2f", px0) + "\" y2=\"" + py +
           "\" stroke=\"black\" stroke-width=\"1\"/>\n";
    svg += "<text x=\"" + fmt("%.2f", px0 - 8) + "\" y=\"" +
           fmt("%.2f", sy(y) + 4) +
           "\" font-family=\"monospace\" font-size=\"12\" "
           "text-anchor=\"end\">" +
           fmt("%.4g", y == 0.0 ? 0.0 : y) + "</text>\n";
  }

  // Frame.
  svg += "<rect x=\"" + fmt("%.2f", px0) + "\" y=\"" + fmt("%.2f", py1) +
         "\" width=\"" + fmt("%.2f", px1 - px0) + "\" height=\"" +
         fmt("%.2f", py0 - py1) +
         "\" fill=\"none\" stroke=\"black\" stroke-width=\"1\"/>\n";

  // Zero line.
  if (y_min < 0.0 && y_max > 0.0) {
    const std::string py = fmt("%.2f", sy(0.0));
    svg += "<line x1=\"" + fmt("%.2f", px0) + "\" y1=\"" + py + "\" x2=\"" +
           fmt("%.2f", px1) + "\" y2=\"" + py +
           "\" stroke=\"#888888\" stroke-width=\"1\" "
           "stroke-dasharray=\"4,3\"/>\n";
  }

  // Curves.
  for (std::size_t i = 0; i < series.size(); ++i) {
    const char* color = kPalette[i % std::size(kPalette)];
    svg += "<polyline fill=\"none\" stroke=\"";
    svg += color;
    svg += "\" stroke-width=\"1.5\" points=\"";
    for (const auto& [x, y] : series[i].points) {
      svg += fmt("%.2f", sx(x)) + "," + fmt("%.2f", sy(y)) + " ";
    }
    if (!series[i].points.empty()) svg.pop_back();
    svg += "\"/>\n";
  }

  // Legend (top left inside the frame).
  for (std::size_t i = 0; i < series.size(); ++i) {
    const char* color = kPalette[i % std::size(kPalette)];
    const double ly = py1 + 16 + 18 * static_cast<double>(i);
    svg += "<rect x=\"" + fmt("%.2f", px0 + 10) + "\" y=\"" +
           fmt("%.2f", ly - 9) + "\" width=\"18\" height=\"9\" fill=\"";
    svg += color;
    svg += "\"/>\n";
    svg += "<text x=\"" + fmt("%.2f", px0 + 34) + "\" y=\"" + fmt("%.2f", ly) +
           "\" font-family=\"monospace\" font-size=\"12\">" +
           xml_escape(series[i].label) + "</text>\n";
  }

  // Axis labels.
  svg += "<text x=\"" + fmt("%.2f", 0.5 * (px0 + px1)) + "\" y=\"" +
         fmt("%.2f", kHeight - 20) +
         "\" font-family=\"monospace\" font-size=\"14\" "
         "text-anchor=\"middle\">" +
         xml_escape(x_label) + "</text>\n";
  svg += "<text x=\"20\" y=\"" + fmt("%.2f", 0.5 * (py0 + py1)) +
         "\" font-family=\"monospace\" font-size=\"14\" "
         "text-anchor=\"middle\" transform=\"rotate(-90 20 " +
         fmt("%.2f", 0.5 * (py0 + py1)) + ")\">" +
         xml_escape(y_label) + "</text>\n";

  svg += "</svg>\n";
  return svg;
}

}  // namespace pham
