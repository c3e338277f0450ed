// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>
#include <utility>
#include <vector>

#include "swapnet/experiments.hpp"

namespace swapnet {

// Self-contained SVG output (inline styling, no external assets). Empty
// input is an error and no file is written.

struct Series {
  std::string label;
  std::vector<std::pair<double, double>> points;
};

void render_line_svg(const std::vector<Series>& series, const std::string& x_label,
                     const std::string& y_label, const std::string& path);

void render_histogram_svg(const Histogram& hist, const std::string& x_label,
                          const std::string& path);

// Two-color heatmap (P1 green, P2 gold) with ties in gray.
void render_winner_svg(const WinnerMap& map, const std::string& path);

}  // namespace swapnet
