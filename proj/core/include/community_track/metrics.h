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

#ifndef COMMUNITY_TRACK_METRICS_H_
#define COMMUNITY_TRACK_METRICS_H_

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "absl/status/statusor.h"
#include "community_track/graph.h"
#include "community_track/partition.h"

namespace community_track {

inline constexpr double kDefaultMatchThreshold = 0.51;

struct MutualInformation {
  double mi = 0;
  double h_t = 0;
  double h_t1 = 0;
};

// Mutual information (natural log) between two labelings of the same
// nodes: `t[i]` and `t1[i]` are the communities of node i at the two times.
absl::StatusOr<MutualInformation> ComputeMutualInformation(
    std::span<const CommunityId> t, std::span<const CommunityId> t1);
// Restricted to the subscribers present in both partitions.
absl::StatusOr<MutualInformation> ComputeMutualInformation(
    const ExternalPartition& t, const ExternalPartition& t1);

struct CommunityPair {
  CommunityId old_community = 0;
  CommunityId new_community = 0;

  friend bool operator==(const CommunityPair&, const CommunityPair&) = default;
  friend auto operator<=>(const CommunityPair&, const CommunityPair&) = default;
};

// Pairs whose overlap exceeds `threshold` times the size of either side.
// Community sizes and overlaps count common nodes only. Sorted by old id.
absl::StatusOr<std::vector<CommunityPair>> MatchCommunities(
    std::span<const CommunityId> t, std::span<const CommunityId> t1,
    double threshold = kDefaultMatchThreshold);

struct JaccardMatch {
  CommunityId old_community = 0;
  CommunityId new_community = 0;
  double jaccard = 0;
};

// For each old community, the new community with the highest Jaccard
// similarity (smallest id on ties), kept when it reaches `threshold`.
absl::StatusOr<std::vector<JaccardMatch>> JaccardMatching(
    std::span<const CommunityId> t, std::span<const CommunityId> t1,
    double threshold);

struct EvolutionReport {
  double mutual_information = 0;
  double entropy_t = 0;
  double entropy_t1 = 0;
  std::vector<CommunityPair> matching_pairs;
  double match_threshold = kDefaultMatchThreshold;
  double modularity_t1 = 0;
  uint64_t communities_t = 0;
  uint64_t communities_t1 = 0;
  uint64_t common_nodes = 0;
};

// Stability and quality of `partition_t1` (a partition of `graph_t1`)
// against the partition of the previous month.
absl::StatusOr<EvolutionReport> BuildReport(const Snapshot& graph_t1,
                                            const ExternalPartition& partition_t,
                                            const Partition& partition_t1,
                                            double threshold = kDefaultMatchThreshold);

// Run parameters printed in front of each report row.
struct ReportKey {
  double p = 0;
  double q = 0;
  uint64_t seed = 0;
};

inline constexpr char kReportCsvHeader[] =
    "p,q,seed,mi,h_t,h_t1,matching_count,modularity,r_communities,"
    "s_communities,common_nodes";

// One CSV row without trailing newline. Reals use 12 significant digits.
std::string FormatReportRow(const ReportKey& key,
                            const EvolutionReport& report);

}  // namespace community_track

#endif  // COMMUNITY_TRACK_METRICS_H_
