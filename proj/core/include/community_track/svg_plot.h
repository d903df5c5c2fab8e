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

#ifndef COMMUNITY_TRACK_SVG_PLOT_H_
#define COMMUNITY_TRACK_SVG_PLOT_H_

#include <string>
#include <vector>

namespace community_track {

// A value surface over a regular grid, drawn as a colored cell map.
struct Heatmap {
  std::string title;
  std::string x_label;
  std::string y_label;
  std::vector<double> x_values;
  std::vector<double> y_values;
  // values[y][x]
  std::vector<std::vector<double>> values;
};

// Self-contained SVG document; cells carry their value as a tooltip.
std::string RenderHeatmapSvg(const Heatmap& heatmap);

}  // namespace community_track

#endif  // COMMUNITY_TRACK_SVG_PLOT_H_
