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

#ifndef COMMUNITY_TRACK_SWEEP_H_
#define COMMUNITY_TRACK_SWEEP_H_

#include <cstdint>
#include <string>
#include <vector>

#include "absl/status/status.h"
#include "absl/status/statusor.h"
#include "community_track/dynamic.h"
#include "community_track/graph.h"
#include "community_track/metrics.h"
#include "community_track/partition.h"

namespace community_track {

// Grid of (p, q) values, each evaluated with `seeds` consecutive seeds
// starting at `seed_base`.
struct SweepSpec {
  std::vector<double> p_values;
  std::vector<double> q_values;
  int seeds = 1;
  uint64_t seed_base = 0;
  double match_threshold = kDefaultMatchThreshold;
  // free_rate, sampling mode, q scope and visit order for every cell; p, q
  // and seed are overwritten per cell.
  DynamicParams base;
  // Worker threads; 0 picks the hardware concurrency, capped by the
  // COMMUNITY_TRACK_THREADS environment variable.
  int threads = 0;

  absl::Status Validate() const;
};

// Percent grid 0, 10, ..., 100 expressed as probabilities.
std::vector<double> DefaultGrid();

struct SweepRow {
  ReportKey key;
  EvolutionReport report;
};

// Mean over seeds of one (p, q) cell.
struct SweepCell {
  double p = 0;
  double q = 0;
  double mutual_information = 0;
  double matching_count = 0;
  double modularity = 0;
};

// Runs every (p, q, seed) cell on a worker pool. Rows come back ordered by
// (p, q, seed) whatever order the cells finish in. The first failing cell
// aborts the sweep and is named in the error.
absl::StatusOr<std::vector<SweepRow>> RunSweep(const Snapshot& graph_t1,
                                               const ExternalPartition& partition_t,
                                               const SweepSpec& spec);

std::vector<SweepCell> Summarize(
    const std::vector<SweepRow>& rows);

// Writes sweep.csv, summary.csv and one SVG per metric into `directory`,
// which must exist. Returns the paths written.
absl::StatusOr<std::vector<std::string>> WriteSweepOutputs(
    const std::string& directory, const std::vector<SweepRow>& rows);

// Worker count after applying COMMUNITY_TRACK_THREADS.
int ResolveThreadCount(int requested);

}  // namespace community_track

#endif  // COMMUNITY_TRACK_SWEEP_H_
