// Copyright 2026 The community_track Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "community_track/svg_plot.h"

#include <algorithm>
#include <array>
#include <cmath>

#include "absl/strings/str_cat.h"
#include "absl/strings/str_format.h"
#include "absl/strings/str_replace.h"

namespace community_track {
namespace {

constexpr double kCell = 40;
constexpr double kLeft = 80;
constexpr double kTop = 50;
constexpr double kBarWidth = 18;

std::string Escape(const std::string& text) {
  return absl::StrReplaceAll(text, {{"&", "&amp;"}, {"<", "&lt;"}, {">", "&gt;"}});
}

// Piecewise-linear approximation of the viridis map.
std::string ColorAt(double t) {
  static constexpr std::array<std::array<double, 3>, 5> kStops = {{
      {68, 1, 84}, {59, 82, 139}, {33, 145, 140}, {94, 201, 98}, {253, 231, 37},
  }};
  t = std::clamp(std::isfinite(t) ? t : 0.0, 0.0, 1.0) * (kStops.size() - 1);
  const size_t i = std::min<size_t>(static_cast<size_t>(t), kStops.size() - 2);
  const double f = t - static_cast<double>(i);
  std::array<int, 3> rgb;
  for (int k = 0; k < 3; ++k) {
    rgb[k] = static_cast<int>(
        std::lround(kStops[i][k] + f * (kStops[i + 1][k] - kStops[i][k])));
  }
  return absl::StrFormat("#%02x%02x%02x", rgb[0], rgb[1], rgb[2]);
}

}  // namespace

std::string RenderHeatmapSvg(const Heatmap& heatmap) {
  const size_t nx = heatmap.x_values.size();
  const size_t ny = heatmap.y_values.size();
  double lo = INFINITY, hi = -INFINITY;
  for (const auto& row : heatmap.values) {
    for (double v : row) {
      lo = std::min(lo, v);
      hi = std::max(hi, v);
    }
  }
  if (!(lo <= hi)) lo = hi = 0;
  const double range = hi > lo ? hi - lo : 1.0;

  const double plot_w = kCell * nx;
  const double plot_h = kCell * ny;
  const double width = kLeft + plot_w + 110;
  const double height = kTop + plot_h + 70;

  std::string svg = absl::StrFormat(
      "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"%.0f\" height=\"%.0f\" "
      "font-family=\"sans-serif\" font-size=\"11\">\n"
      "<rect width=\"100%%\" height=\"100%%\" fill=\"white\"/>\n"
      "<text x=\"%.1f\" y=\"24\" font-size=\"15\" text-anchor=\"middle\">%s</text>\n",
      width, height, kLeft + plot_w / 2, Escape(heatmap.title));

  // Row 0 of `values` sits at the bottom so y grows upwards.
  for (size_t y = 0; y < ny; ++y) {
    for (size_t x = 0; x < nx; ++x) {
      const double v = heatmap.values[y][x];
      absl::StrAppendFormat(
          &svg,
          "<rect x=\"%.1f\" y=\"%.1f\" width=\"%.1f\" height=\"%.1f\" "
          "fill=\"%s\"><title>%s=%g %s=%g: %.6g</title></rect>\n",
          kLeft + kCell * x, kTop + kCell * (ny - 1 - y), kCell, kCell,
          ColorAt((v - lo) / range), Escape(heatmap.x_label),
          heatmap.x_values[x], Escape(heatmap.y_label), heatmap.y_values[y], v);
    }
  }
  for (size_t x = 0; x < nx; ++x) {
    absl::StrAppendFormat(&svg,
                          "<text x=\"%.1f\" y=\"%.1f\" text-anchor=\"middle\">%g</text>\n",
                          kLeft + kCell * (x + 0.5), kTop + plot_h + 15,
                          heatmap.x_values[x]);
  }
  for (size_t y = 0; y < ny; ++y) {
    absl::StrAppendFormat(&svg,
                          "<text x=\"%.1f\" y=\"%.1f\" text-anchor=\"end\">%g</text>\n",
                          kLeft - 6, kTop + kCell * (ny - 1 - y) + kCell / 2 + 4,
                          heatmap.y_values[y]);
  }
  absl::StrAppendFormat(
      &svg,
      "<text x=\"%.1f\" y=\"%.1f\" text-anchor=\"middle\">%s</text>\n"
      "<text x=\"20\" y=\"%.1f\" text-anchor=\"middle\" "
      "transform=\"rotate(-90 20 %.1f)\">%s</text>\n",
      kLeft + plot_w / 2, kTop + plot_h + 38, Escape(heatmap.x_label),
      kTop + plot_h / 2, kTop + plot_h / 2, Escape(heatmap.y_label));

  // Color bar.
  const double bar_x = kLeft + plot_w + 30;
  constexpr int kSteps = 32;
  for (int i = 0; i < kSteps; ++i) {
    absl::StrAppendFormat(
        &svg,
        "<rect x=\"%.1f\" y=\"%.2f\" width=\"%.1f\" height=\"%.2f\" fill=\"%s\"/>\n",
        bar_x, kTop + plot_h * (kSteps - 1 - i) / kSteps, kBarWidth,
        plot_h / kSteps + 0.5, ColorAt((i + 0.5) / kSteps));
  }
  absl::StrAppendFormat(
      &svg,
      "<text x=\"%.1f\" y=\"%.1f\">%.4g</text>\n"
      "<text x=\"%.1f\" y=\"%.1f\">%.4g</text>\n</svg>\n",
      bar_x + kBarWidth + 4, kTop + 10, hi, bar_x + kBarWidth + 4,
      kTop + plot_h, lo);
  return svg;
}

}  // namespace community_track
