// SPDX-License-Identifier: Apache-2.0

#include "swapnet/svg.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>

#include "swapnet/csv.hpp"
#include "swapnet/error.hpp"

namespace swapnet {

namespace {

constexpr double kWidth = 640.0;
constexpr double kHeight = 480.0;
constexpr double kMarginLeft = 70.0;
constexpr double kMarginRight = 20.0;
constexpr double kMarginTop = 24.0;
constexpr double kMarginBottom = 52.0;

const char* kPalette[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd",
                          "#ff7f0e", "#8c564b", "#17becf", "#7f7f7f"};

struct Frame {
  double x_lo, x_hi, y_lo, y_hi;

  double px(double x) const {
    return kMarginLeft + (x - x_lo) / (x_hi - x_lo) * (kWidth - kMarginLeft - kMarginRight);
  }
  double py(double y) const {
    return kHeight - kMarginBottom -
           (y - y_lo) / (y_hi - y_lo) * (kHeight - kMarginTop - kMarginBottom);
  }
};

std::ofstream open_svg(const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("IoError", "cannot open " + path + " for writing");
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kWidth
      << "\" height=\"" << kHeight << "\" viewBox=\"0 0 " << kWidth << ' '
      << kHeight << "\">\n"
      << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  return out;
}

void close_svg(std::ofstream& out, const std::string& path) {
  out << "</svg>\n";
  out.flush();
  if (!out) throw Error("IoError", "write failed for " + path);
}

void draw_axes(std::ofstream& out, const Frame& f, const std::string& x_label,
               const std::string& y_label) {
  out << "<g stroke=\"black\" stroke-width=\"1\">\n";
  out << "<line x1=\"" << f.px(f.x_lo) << "\" y1=\"" << f.py(f.y_lo) << "\" x2=\""
      << f.px(f.x_hi) << "\" y2=\"" << f.py(f.y_lo) << "\"/>\n";
  out << "<line x1=\"" << f.px(f.x_lo) << "\" y1=\"" << f.py(f.y_lo) << "\" x2=\""
      << f.px(f.x_lo) << "\" y2=\"" << f.py(f.y_hi) << "\"/>\n";
  out << "</g>\n";

  const int ticks = 5;
  out << "<g font-family=\"sans-serif\" font-size=\"12\" fill=\"black\">\n";
  for (int k = 0; k <= ticks; ++k) {
    const double x = f.x_lo + (f.x_hi - f.x_lo) * k / ticks;
    const double y = f.y_lo + (f.y_hi - f.y_lo) * k / ticks;
    out << "<line x1=\"" << f.px(x) << "\" y1=\"" << f.py(f.y_lo) << "\" x2=\""
        << f.px(x) << "\" y2=\"" << f.py(f.y_lo) + 5 << "\" stroke=\"black\"/>\n";
    out << "<text x=\"" << f.px(x) << "\" y=\"" << f.py(f.y_lo) + 18
        << "\" text-anchor=\"middle\">" << format_g9(x).substr(0, 6) << "</text>\n";
    out << "<line x1=\"" << f.px(f.x_lo) - 5 << "\" y1=\"" << f.py(y) << "\" x2=\""
        << f.px(f.x_lo) << "\" y2=\"" << f.py(y) << "\" stroke=\"black\"/>\n";
    out << "<text x=\"" << f.px(f.x_lo) - 8 << "\" y=\"" << f.py(y) + 4
        << "\" text-anchor=\"end\">" << format_g9(y).substr(0, 6) << "</text>\n";
  }
  out << "<text x=\"" << (kMarginLeft + kWidth - kMarginRight) / 2 << "\" y=\""
      << kHeight - 12 << "\" text-anchor=\"middle\">" << x_label << "</text>\n";
  out << "<text x=\"16\" y=\"" << (kMarginTop + kHeight - kMarginBottom) / 2
      << "\" text-anchor=\"middle\" transform=\"rotate(-90 16 "
      << (kMarginTop + kHeight - kMarginBottom) / 2 << ")\">" << y_label
      << "</text>\n";
  out << "</g>\n";
}

}  // namespace

void render_line_svg(const std::vector<Series>& series, const std::string& x_label,
                     const std::string& y_label, const std::string& path) {
  if (series.empty()) throw Error("InsufficientData", "no series to plot");
  for (const Series& s : series)
    if (s.points.empty()) throw Error("InsufficientData", "empty series " + s.label);

  Frame f{1e300, -1e300, 0.0, -1e300};
  for (const Series& s : series)
    for (const auto& [x, y] : s.points) {
      f.x_lo = std::min(f.x_lo, x);
      f.x_hi = std::max(f.x_hi, x);
      f.y_lo = std::min(f.y_lo, y);
      f.y_hi = std::max(f.y_hi, y);
    }
  if (f.x_hi <= f.x_lo) f.x_hi = f.x_lo + 1.0;
  if (f.y_hi <= f.y_lo) f.y_hi = f.y_lo + 1.0;

  auto out = open_svg(path);
  draw_axes(out, f, x_label, y_label);
  for (std::size_t si = 0; si < series.size(); ++si) {
    const char* color = kPalette[si % (sizeof(kPalette) / sizeof(kPalette[0]))];
    out << "<polyline fill=\"none\" stroke=\"" << color
        << "\" stroke-width=\"1.5\" points=\"";
    for (const auto& [x, y] : series[si].points)
      out << f.px(x) << ',' << f.py(y) << ' ';
    out << "\"/>\n";
    for (const auto& [x, y] : series[si].points)
      out << "<circle cx=\"" << f.px(x) << "\" cy=\"" << f.py(y)
          << "\" r=\"2.5\" fill=\"" << color << "\"/>\n";
    // Legend entry.
    const double ly = kMarginTop + 16.0 * static_cast<double>(si);
    out << "<line x1=\"" << kWidth - 150 << "\" y1=\"" << ly << "\" x2=\""
        << kWidth - 126 << "\" y2=\"" << ly << "\" stroke=\"" << color
        << "\" stroke-width=\"2\"/>\n";
    out << "<text x=\"" << kWidth - 120 << "\" y=\"" << ly + 4
        << "\" font-family=\"sans-serif\" font-size=\"12\">" << series[si].label
        << "</text>\n";
  }
  close_svg(out, path);
}

void render_histogram_svg(const Histogram& hist, const std::string& x_label,
                          const std::string& path) {
  if (hist.counts.empty()) throw Error("InsufficientData", "empty histogram");
  std::size_t peak = 0;
  for (std::size_t c : hist.counts) peak = std::max(peak, c);
  if (peak == 0) peak = 1;

  Frame f{hist.edges.front(), hist.edges.back(), 0.0, static_cast<double>(peak)};
  if (f.x_hi <= f.x_lo) f.x_hi = f.x_lo + 1.0;

  auto out = open_svg(path);
  draw_axes(out, f, x_label, "count");
  for (std::size_t k = 0; k < hist.counts.size(); ++k) {
    const double x0 = f.px(hist.edges[k]);
    const double x1 = f.px(hist.edges[k + 1]);
    const double y0 = f.py(static_cast<double>(hist.counts[k]));
    const double y1 = f.py(0.0);
    out << "<rect x=\"" << x0 << "\" y=\"" << y0 << "\" width=\"" << (x1 - x0)
        << "\" height=\"" << (y1 - y0)
        << "\" fill=\"#1f77b4\" stroke=\"white\" stroke-width=\"0.5\"/>\n";
  }
  close_svg(out, path);
}

void render_winner_svg(const WinnerMap& map, const std::string& path) {
  if (map.cells.empty()) throw Error("InsufficientData", "empty winner map");

  Frame f{map.cells.front().theta1, map.cells.back().theta1,
          map.cells.front().theta2, map.cells.back().theta2};
  if (f.x_hi <= f.x_lo) f.x_hi = f.x_lo + 1.0;
  if (f.y_hi <= f.y_lo) f.y_hi = f.y_lo + 1.0;

  const double cell_w =
      (kWidth - kMarginLeft - kMarginRight) / static_cast<double>(map.n_theta1);
  const double cell_h =
      (kHeight - kMarginTop - kMarginBottom) / static_cast<double>(map.n_theta2);

  auto out = open_svg(path);
  draw_axes(out, f, "theta1", "theta2");
  for (std::size_t i = 0; i < map.n_theta1; ++i)
    for (std::size_t j = 0; j < map.n_theta2; ++j) {
      const WinnerCell& c = map.cells[i * map.n_theta2 + j];
      const char* fill = c.winner == PathWinner::P1   ? "#2ca02c"
                         : c.winner == PathWinner::P2 ? "#ffd700"
                                                      : "#9c9c9c";
      out << "<rect x=\"" << kMarginLeft + cell_w * static_cast<double>(i)
          << "\" y=\""
          << kHeight - kMarginBottom - cell_h * static_cast<double>(j + 1)
          << "\" width=\"" << cell_w << "\" height=\"" << cell_h << "\" fill=\""
          << fill << "\"/>\n";
    }
  // Legend.
  out << "<g font-family=\"sans-serif\" font-size=\"12\">"
      << "<rect x=\"" << kWidth - 150 << "\" y=\"" << kMarginTop
      << "\" width=\"12\" height=\"12\" fill=\"#2ca02c\"/>"
      << "<text x=\"" << kWidth - 132 << "\" y=\"" << kMarginTop + 10
      << "\">P1 wins</text>"
      << "<rect x=\"" << kWidth - 150 << "\" y=\"" << kMarginTop + 18
      << "\" width=\"12\" height=\"12\" fill=\"#ffd700\"/>"
      << "<text x=\"" << kWidth - 132 << "\" y=\"" << kMarginTop + 28
      << "\">P2 wins</text>"
      << "<rect x=\"" << kWidth - 150 << "\" y=\"" << kMarginTop + 36
      << "\" width=\"12\" height=\"12\" fill=\"#9c9c9c\"/>"
      << "<text x=\"" << kWidth - 132 << "\" y=\"" << kMarginTop + 46
      << "\">tie</text></g>\n";
  close_svg(out, path);
}

}  // namespace swapnet
