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

#ifndef COMMUNITY_TRACK_PARTITION_H_
#define COMMUNITY_TRACK_PARTITION_H_

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "absl/container/flat_hash_map.h"
#include "absl/status/status.h"
#include "community_track/graph.h"

namespace community_track {

using CommunityId = int64_t;

// Marker value when a partition carries no communities inherited from an
// earlier snapshot.
inline constexpr CommunityId kNoOldCommunity = -1;

// Assignment of every dense node of a snapshot to a community.
//
// Ids up to and including `max_old_community()` were inherited from the
// previous month; larger ids were created for this month.
class Partition {
 public:
  Partition() = default;
  explicit Partition(std::vector<CommunityId> assignment,
                     CommunityId max_old_community = kNoOldCommunity);

  static Partition Singletons(NodeId node_count);

  NodeId size() const { return static_cast<NodeId>(assignment_.size()); }
  CommunityId community(NodeId u) const { return assignment_[u]; }
  std::span<const CommunityId> assignment() const { return assignment_; }
  CommunityId max_old_community() const { return max_old_community_; }
  bool IsOld(CommunityId c) const { return c <= max_old_community_; }

  // Member count per community id, ordered by id.
  std::map<CommunityId, uint64_t> CommunitySizes() const;
  size_t CommunityCount() const;

  // Relabels communities 0..k-1 in order of their smallest member and drops
  // the old/new marker. Used for one-shot detection output.
  Partition Compacted() const;

  absl::Status Validate() const;

  friend bool operator==(const Partition&, const Partition&) = default;

 private:
  std::vector<CommunityId> assignment_;
  CommunityId max_old_community_ = kNoOldCommunity;
};

// A partition keyed by external subscriber id, as read from a partition
// file. This is how the time-T partition is handed to the time-T+1 run.
struct ExternalPartition {
  absl::flat_hash_map<std::string, CommunityId> communities;
  CommunityId max_old_community = kNoOldCommunity;

  // Largest community id in use, or kNoOldCommunity when empty.
  CommunityId MaxCommunityId() const;
  size_t CommunityCount() const;
};

ExternalPartition ToExternal(const Snapshot& snapshot,
                             const Partition& partition);

// Community labels of the nodes present both in `partition_t` and in
// `snapshot_t1`, listed in the snapshot's dense order. Element i of `t` and
// element i of `t1` describe the same subscriber.
struct AlignedLabels {
  std::vector<CommunityId> t;
  std::vector<CommunityId> t1;
};

AlignedLabels AlignOnCommonNodes(const ExternalPartition& partition_t,
                                 const Snapshot& snapshot_t1,
                                 const Partition& partition_t1);
AlignedLabels AlignOnCommonNodes(const ExternalPartition& partition_t,
                                 const ExternalPartition& partition_t1);

}  // namespace community_track

#endif  // COMMUNITY_TRACK_PARTITION_H_
