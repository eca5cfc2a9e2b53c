#include "cartpole/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>

namespace cartpole {

namespace {

constexpr double kWidth = 800.0;
constexpr double kHeight = 480.0;
constexpr double kMarginLeft = 72.0;
constexpr double kMarginRight = 24.0;
constexpr double kMarginTop = 44.0;
constexpr double kMarginBottom = 56.0;
constexpr int kTicks = 5;

struct Range {
  double lo = 0.0;
  double hi = 1.0;
};

Range pad(double lo, double hi) {
  if (!(lo < hi)) {
    const double span = std::max(std::abs(lo), 1.0);
    return {lo - 0.5 * span, hi + 0.5 * span};
  }
  return {lo, hi};
}

std::string num(double v) {
  char buffer[32];
  std::snprintf(buffer, sizeof(buffer), "%.6g", v);
  return buffer;
}

std::string px(double v) {
  char buffer[32];
  std::snprintf(buffer, sizeof(buffer), "%.2f", v);
  return buffer;
}

std::string escape(const std::string& text) {
  std::string out;
  for (char c : text) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      default: out += c;
    }
  }
  return out;
}

}  // namespace

void write_line_chart(const std::filesystem::path& path,
                      const std::string& title, const std::string& x_label,
                      const std::string& y_label,
                      std::span<const SvgSeries> series) {
  double x_lo = std::numeric_limits<double>::infinity();
  double x_hi = -x_lo;
  double y_lo = x_lo;
  double y_hi = -x_lo;
  for (const SvgSeries& s : series) {
    for (const auto& [x, y] : s.points) {
      x_lo = std::min(x_lo, x);
      x_hi = std::max(x_hi, x);
      y_lo = std::min(y_lo, y);
      y_hi = std::max(y_hi, y);
    }
  }
  if (!std::isfinite(x_lo)) {
    x_lo = 0.0;
    x_hi = 1.0;
    y_lo = 0.0;
    y_hi = 1.0;
  }
  const Range xr = pad(x_lo, x_hi);
  const Range yr = pad(y_lo, y_hi);

  const double plot_w = kWidth - kMarginLeft - kMarginRight;
  const double plot_h = kHeight - kMarginTop - kMarginBottom;
  const auto to_px_x = [&](double x) {
    return kMarginLeft + (x - xr.lo) / (xr.hi - xr.lo) * plot_w;
  };
  const auto to_px_y = [&](double y) {
    return kMarginTop + plot_h - (y - yr.lo) / (yr.hi - yr.lo) * plot_h;
  };

  std::ofstream out(path);
  if (!out) throw IoError("cannot write " + path.string());

  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kWidth
      << "\" height=\"" << kHeight << "\" viewBox=\"0 0 " << kWidth << ' '
      << kHeight << "\">\n";
  out << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  out << "<text x=\"" << kWidth / 2 << "\" y=\"24\" text-anchor=\"middle\" "
         "font-family=\"sans-serif\" font-size=\"16\">"
      << escape(title) << "</text>\n";

  // gridlines and tick labels
  for (int i = 0; i < kTicks; ++i) {
    const double fx = xr.lo + (xr.hi - xr.lo) * i / (kTicks - 1);
    const double fy = yr.lo + (yr.hi - yr.lo) * i / (kTicks - 1);
    const std::string gx = px(to_px_x(fx));
    const std::string gy = px(to_px_y(fy));
    out << "<line x1=\"" << gx << "\" y1=\"" << px(kMarginTop) << "\" x2=\""
        << gx << "\" y2=\"" << px(kMarginTop + plot_h)
        << "\" stroke=\"#dddddd\"/>\n";
    out << "<line x1=\"" << px(kMarginLeft) << "\" y1=\"" << gy << "\" x2=\""
        << px(kMarginLeft + plot_w) << "\" y2=\"" << gy
        << "\" stroke=\"#dddddd\"/>\n";
    out << "<text x=\"" << gx << "\" y=\"" << px(kMarginTop + plot_h + 18)
        << "\" text-anchor=\"middle\" font-family=\"sans-serif\" "
           "font-size=\"11\">"
        << num(fx) << "</text>\n";
    out << "<text x=\"" << px(kMarginLeft - 8) << "\" y=\"" << gy
        << "\" text-anchor=\"end\" dominant-baseline=\"middle\" "
           "font-family=\"sans-serif\" font-size=\"11\">"
        << num(fy) << "</text>\n";
  }

  // axes
  out << "<line x1=\"" << px(kMarginLeft) << "\" y1=\"" << px(kMarginTop)
      << "\" x2=\"" << px(kMarginLeft) << "\" y2=\"" << px(kMarginTop + plot_h)
      << "\" stroke=\"black\"/>\n";
  out << "<line x1=\"" << px(kMarginLeft) << "\" y1=\""
      << px(kMarginTop + plot_h) << "\" x2=\"" << px(kMarginLeft + plot_w)
      << "\" y2=\"" << px(kMarginTop + plot_h) << "\" stroke=\"black\"/>\n";
  out << "<text x=\"" << kWidth / 2 << "\" y=\"" << kHeight - 12
      << "\" text-anchor=\"middle\" font-family=\"sans-serif\" "
         "font-size=\"13\">"
      << escape(x_label) << "</text>\n";
  out << "<text x=\"16\" y=\"" << kMarginTop + plot_h / 2
      << "\" text-anchor=\"middle\" font-family=\"sans-serif\" "
         "font-size=\"13\" transform=\"rotate(-90 16 "
      << kMarginTop + plot_h / 2 << ")\">" << escape(y_label) << "</text>\n";

  for (const SvgSeries& s : series) {
    out << "<polyline fill=\"none\" stroke=\"" << s.color
        << "\" stroke-width=\"1.2\" points=\"";
    for (const auto& [x, y] : s.points)
      out << px(to_px_x(x)) << ',' << px(to_px_y(y)) << ' ';
    out << "\"/>\n";
  }

  if (series.size() > 1) {
    double ly = kMarginTop + 10;
    for (const SvgSeries& s : series) {
      const double lx = kMarginLeft + plot_w - 170;
      out << "<line x1=\"" << px(lx) << "\" y1=\"" << px(ly) << "\" x2=\""
          << px(lx + 24) << "\" y2=\"" << px(ly) << "\" stroke=\"" << s.color
          << "\" stroke-width=\"2\"/>\n";
      out << "<text x=\"" << px(lx + 30) << "\" y=\"" << px(ly)
          << "\" dominant-baseline=\"middle\" font-family=\"sans-serif\" "
             "font-size=\"12\">"
          << escape(s.label) << "</text>\n";
      ly += 18;
    }
  }

  out << "</svg>\n";
  if (!out) throw IoError("write failed for " + path.string());
}

}  // namespace cartpole
