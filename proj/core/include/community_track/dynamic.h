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

#ifndef COMMUNITY_TRACK_DYNAMIC_H_
#define COMMUNITY_TRACK_DYNAMIC_H_

#include <cstdint>
#include <span>
#include <vector>

#include "absl/status/status.h"
#include "absl/status/statusor.h"
#include "community_track/graph.h"
#include "community_track/louvain.h"
#include "community_track/partition.h"

namespace community_track {

struct DynamicParams {
  // Probability that a node present at both times is pinned to its old
  // community for the whole run.
  double p = 0;
  // Probability that a node prefers communities inherited from time T.
  double q = 0;
  // Probability that a node present at time T starts in a fresh community
  // anyway. Zero reproduces the plain warm start.
  double free_rate = 0;
  uint64_t seed = 0;
  // Draw exactly round(p * |remaining|) fixed and round(q * |nodes|)
  // preferential nodes instead of independent coin flips.
  bool exact_count_sampling = false;
  // Apply preferential attachment on the first hierarchical level only.
  bool q_first_level_only = false;
  VisitOrder order;

  absl::Status Validate() const;
};

// Per-node flags for the time-T+1 snapshot, indexed by dense node id.
struct NodeFlags {
  std::vector<uint8_t> is_fixed;
  std::vector<uint8_t> is_preferential;
  // Community at time T, or kNoOldCommunity for nodes that are new.
  std::vector<CommunityId> old_community;

  size_t FixedCount() const;
  size_t PreferentialCount() const;
};

// Warm start: nodes seen at time T keep their old community unless drawn as
// free; new and free nodes get fresh ids counting up from the largest old id,
// in dense-node order. Nodes flagged in `never_free` are never drawn free.
Partition LmagInit(const Snapshot& snapshot_t1,
                   const ExternalPartition& partition_t, double free_rate,
                   uint64_t seed, std::span<const uint8_t> never_free = {});

NodeFlags SampleFlags(const Snapshot& snapshot_t1,
                      const ExternalPartition& partition_t,
                      const DynamicParams& params);

// Move rule with fixed nodes and preferential attachment, tracking node
// flags up the hierarchy. A super-node is fixed (or preferential) when at
// least one of its members is.
class DynamicMoveFilter : public MoveFilter {
 public:
  DynamicMoveFilter(const NodeFlags& flags, bool q_first_level_only);

  uint32_t Choose(const LouvainState& state, NodeId node,
                  const MoveCandidate& own,
                  std::span<const MoveCandidate> neighbors) override;
  void OnAggregate(std::span<const NodeId> super_node_of,
                   NodeId super_node_count) override;

  int level() const { return level_; }

 private:
  std::vector<uint8_t> fixed_;
  std::vector<uint8_t> preferential_;
  bool q_first_level_only_;
  int level_ = 0;
};

struct EvolveResult {
  Partition partition;
  double modularity = 0;
  NodeFlags flags;
  int levels = 0;
};

// Partition of the time-T+1 snapshot that stays close to `partition_t`.
absl::StatusOr<EvolveResult> Evolve(const Snapshot& snapshot_t1,
                                    const ExternalPartition& partition_t,
                                    const DynamicParams& params);

}  // namespace community_track

#endif  // COMMUNITY_TRACK_DYNAMIC_H_
