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

#ifndef COMMUNITY_TRACK_SYNTH_H_
#define COMMUNITY_TRACK_SYNTH_H_

#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

#include "absl/status/status.h"
#include "absl/status/statusor.h"
#include "community_track/graph.h"
#include "community_track/partition.h"

namespace community_track {

// Planted-partition benchmark evolving over one step.
struct PlantedConfig {
  int communities = 4;
  int size = 25;
  // Community sizes are drawn uniformly from size +- size_jitter.
  int size_jitter = 0;
  double p_in = 0.3;
  double p_out = 0.01;
  // Fraction of nodes replaced by new subscribers at T+1.
  double churn = 0.1;
  // Fraction of surviving nodes moved to another planted community at T+1.
  double migration = 0.05;
  uint64_t seed = 1;

  absl::Status Validate() const;
};

struct PlantedPair {
  Snapshot t;
  Snapshot t1;
  // Planted community of every generated subscriber, including any that
  // ended up without edges and are therefore absent from the snapshot.
  ExternalPartition truth_t;
  ExternalPartition truth_t1;
};

absl::StatusOr<PlantedPair> GeneratePlantedPair(const PlantedConfig& config);

// Only the time-T graph; churn and migration are ignored.
absl::StatusOr<Snapshot> GeneratePlantedGraph(const PlantedConfig& config,
                                              ExternalPartition* truth = nullptr);

// `external_id<TAB>label_t<TAB>label_t1`, "-" where the subscriber does not
// exist, rows sorted by id.
void WriteTruth(const PlantedPair& pair, std::ostream& out);

}  // namespace community_track

#endif  // COMMUNITY_TRACK_SYNTH_H_
