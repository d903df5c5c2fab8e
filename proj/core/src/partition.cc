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

#include "community_track/partition.h"

#include <algorithm>
#include <utility>

#include "absl/container/flat_hash_set.h"
#include "absl/strings/str_cat.h"

namespace community_track {

Partition::Partition(std::vector<CommunityId> assignment,
                     CommunityId max_old_community)
    : assignment_(std::move(assignment)),
      max_old_community_(max_old_community) {}

Partition Partition::Singletons(NodeId node_count) {
  std::vector<CommunityId> assignment(node_count);
  for (NodeId u = 0; u < node_count; ++u) assignment[u] = u;
  return Partition(std::move(assignment));
}

std::map<CommunityId, uint64_t> Partition::CommunitySizes() const {
  std::map<CommunityId, uint64_t> sizes;
  for (CommunityId c : assignment_) ++sizes[c];
  return sizes;
}

size_t Partition::CommunityCount() const {
  absl::flat_hash_set<CommunityId> seen(assignment_.begin(),
                                        assignment_.end());
  return seen.size();
}

Partition Partition::Compacted() const {
  absl::flat_hash_map<CommunityId, CommunityId> relabel;
  std::vector<CommunityId> assignment(assignment_.size());
  for (size_t u = 0; u < assignment_.size(); ++u) {
    auto [it, inserted] = relabel.try_emplace(
        assignment_[u], static_cast<CommunityId>(relabel.size()));
    assignment[u] = it->second;
  }
  return Partition(std::move(assignment));
}

absl::Status Partition::Validate() const {
  for (size_t u = 0; u < assignment_.size(); ++u) {
    if (assignment_[u] < 0) {
      return absl::InvalidArgumentError(
          absl::StrCat("negative community id at node ", u));
    }
  }
  if (max_old_community_ < kNoOldCommunity) {
    return absl::InvalidArgumentError("max_old_community below -1");
  }
  return absl::OkStatus();
}

CommunityId ExternalPartition::MaxCommunityId() const {
  CommunityId best = kNoOldCommunity;
  for (const auto& [id, c] : communities) best = std::max(best, c);
  return best;
}

size_t ExternalPartition::CommunityCount() const {
  absl::flat_hash_set<CommunityId> seen;
  for (const auto& [id, c] : communities) seen.insert(c);
  return seen.size();
}

ExternalPartition ToExternal(const Snapshot& snapshot,
                             const Partition& partition) {
  ExternalPartition out;
  out.max_old_community = partition.max_old_community();
  out.communities.reserve(snapshot.node_count());
  for (NodeId u = 0; u < snapshot.node_count(); ++u) {
    out.communities.emplace(snapshot.external_id(u), partition.community(u));
  }
  return out;
}

AlignedLabels AlignOnCommonNodes(const ExternalPartition& partition_t,
                                 const Snapshot& snapshot_t1,
                                 const Partition& partition_t1) {
  AlignedLabels aligned;
  for (NodeId u = 0; u < snapshot_t1.node_count(); ++u) {
    auto it = partition_t.communities.find(snapshot_t1.external_id(u));
    if (it == partition_t.communities.end()) continue;
    aligned.t.push_back(it->second);
    aligned.t1.push_back(partition_t1.community(u));
  }
  return aligned;
}

AlignedLabels AlignOnCommonNodes(const ExternalPartition& partition_t,
                                 const ExternalPartition& partition_t1) {
  std::vector<const std::string*> common;
  for (const auto& [id, c] : partition_t1.communities) {
    if (partition_t.communities.contains(id)) common.push_back(&id);
  }
  std::sort(common.begin(), common.end(),
            [](const std::string* a, const std::string* b) { return *a < *b; });
  AlignedLabels aligned;
  aligned.t.reserve(common.size());
  aligned.t1.reserve(common.size());
  for (const std::string* id : common) {
    aligned.t.push_back(partition_t.communities.at(*id));
    aligned.t1.push_back(partition_t1.communities.at(*id));
  }
  return aligned;
}

}  // namespace community_track
