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

#include "community_track/metrics.h"

#include <algorithm>
#include <cmath>
#include <map>
#include <utility>

#include "absl/strings/str_cat.h"
#include "absl/strings/str_format.h"
#include "community_track/louvain.h"

namespace community_track {
namespace {

struct Cell {
  CommunityId old_community;
  CommunityId new_community;
  uint64_t count;
};

// Joint counts in (old, new) order, plus the marginals.
struct Contingency {
  std::vector<Cell> cells;
  std::map<CommunityId, uint64_t> old_sizes;
  std::map<CommunityId, uint64_t> new_sizes;
  uint64_t total = 0;
};

absl::StatusOr<Contingency> BuildContingency(std::span<const CommunityId> t,
                                             std::span<const CommunityId> t1) {
  if (t.size() != t1.size()) {
    return absl::InvalidArgumentError("labelings cover different node counts");
  }
  if (t.empty()) {
    return absl::InvalidArgumentError("no nodes common to both partitions");
  }
  std::vector<std::pair<CommunityId, CommunityId>> pairs(t.size());
  for (size_t i = 0; i < t.size(); ++i) pairs[i] = {t[i], t1[i]};
  std::sort(pairs.begin(), pairs.end());

  Contingency table;
  table.total = t.size();
  for (size_t i = 0; i < pairs.size(); ++i) {
    if (i > 0 && pairs[i] == pairs[i - 1]) {
      ++table.cells.back().count;
    } else {
      table.cells.push_back({pairs[i].first, pairs[i].second, 1});
    }
    ++table.old_sizes[pairs[i].first];
    ++table.new_sizes[pairs[i].second];
  }
  return table;
}

double Entropy(const std::map<CommunityId, uint64_t>& sizes, double total) {
  double h = 0;
  for (const auto& [c, size] : sizes) {
    const double p = static_cast<double>(size) / total;
    h -= p * std::log(p);
  }
  return h;
}

}  // namespace

absl::StatusOr<MutualInformation> ComputeMutualInformation(
    std::span<const CommunityId> t, std::span<const CommunityId> t1) {
  absl::StatusOr<Contingency> table = BuildContingency(t, t1);
  if (!table.ok()) return table.status();
  const double n = static_cast<double>(table->total);
  MutualInformation result;
  for (const Cell& cell : table->cells) {
    const double joint = static_cast<double>(cell.count) / n;
    const double p_old = static_cast<double>(table->old_sizes[cell.old_community]) / n;
    const double p_new = static_cast<double>(table->new_sizes[cell.new_community]) / n;
    result.mi += joint * std::log(joint / (p_old * p_new));
  }
  result.h_t = Entropy(table->old_sizes, n);
  result.h_t1 = Entropy(table->new_sizes, n);
  // Rounding can push an exact zero slightly negative.
  result.mi = std::max(result.mi, 0.0);
  return result;
}

absl::StatusOr<MutualInformation> ComputeMutualInformation(
    const ExternalPartition& t, const ExternalPartition& t1) {
  AlignedLabels aligned = AlignOnCommonNodes(t, t1);
  return ComputeMutualInformation(aligned.t, aligned.t1);
}

absl::StatusOr<std::vector<CommunityPair>> MatchCommunities(
    std::span<const CommunityId> t, std::span<const CommunityId> t1,
    double threshold) {
  if (!(threshold > 0.5 && threshold <= 1.0)) {
    return absl::InvalidArgumentError(absl::StrCat(
        "match threshold must lie in (0.5, 1], got ", threshold));
  }
  absl::StatusOr<Contingency> table = BuildContingency(t, t1);
  if (!table.ok()) return table.status();
  std::vector<CommunityPair> pairs;
  for (const Cell& cell : table->cells) {
    const double overlap = static_cast<double>(cell.count);
    if (overlap > threshold * table->old_sizes[cell.old_community] &&
        overlap > threshold * table->new_sizes[cell.new_community]) {
      pairs.push_back({cell.old_community, cell.new_community});
    }
  }
  return pairs;
}

absl::StatusOr<std::vector<JaccardMatch>> JaccardMatching(
    std::span<const CommunityId> t, std::span<const CommunityId> t1,
    double threshold) {
  if (!(threshold > 0.0 && threshold <= 1.0)) {
    return absl::InvalidArgumentError(absl::StrCat(
        "jaccard threshold must lie in (0, 1], got ", threshold));
  }
  absl::StatusOr<Contingency> table = BuildContingency(t, t1);
  if (!table.ok()) return table.status();
  std::vector<JaccardMatch> matches;
  // Cells are grouped by old community, new ids ascending within a group.
  for (size_t i = 0; i < table->cells.size();) {
    const CommunityId old_community = table->cells[i].old_community;
    JaccardMatch best{old_community, 0, -1.0};
    for (; i < table->cells.size() &&
           table->cells[i].old_community == old_community;
         ++i) {
      const Cell& cell = table->cells[i];
      const double overlap = static_cast<double>(cell.count);
      const double jaccard =
          overlap / (static_cast<double>(table->old_sizes[old_community] +
                                         table->new_sizes[cell.new_community]) -
                     overlap);
      if (jaccard > best.jaccard) best = {old_community, cell.new_community, jaccard};
    }
    if (best.jaccard >= threshold) matches.push_back(best);
  }
  return matches;
}

absl::StatusOr<EvolutionReport> BuildReport(const Snapshot& graph_t1,
                                            const ExternalPartition& partition_t,
                                            const Partition& partition_t1,
                                            double threshold) {
  if (partition_t1.size() != graph_t1.node_count()) {
    return absl::InvalidArgumentError("partition does not cover the graph");
  }
  const AlignedLabels aligned =
      AlignOnCommonNodes(partition_t, graph_t1, partition_t1);
  absl::StatusOr<MutualInformation> mi =
      ComputeMutualInformation(aligned.t, aligned.t1);
  if (!mi.ok()) return mi.status();
  absl::StatusOr<std::vector<CommunityPair>> pairs =
      MatchCommunities(aligned.t, aligned.t1, threshold);
  if (!pairs.ok()) return pairs.status();
  absl::StatusOr<double> q = Modularity(graph_t1, partition_t1);
  if (!q.ok()) return q.status();

  EvolutionReport report;
  report.mutual_information = mi->mi;
  report.entropy_t = mi->h_t;
  report.entropy_t1 = mi->h_t1;
  report.matching_pairs = *std::move(pairs);
  report.match_threshold = threshold;
  report.modularity_t1 = *q;
  report.communities_t = partition_t.CommunityCount();
  report.communities_t1 = partition_t1.CommunityCount();
  report.common_nodes = aligned.t.size();
  return report;
}

std::string FormatReportRow(const ReportKey& key,
                            const EvolutionReport& report) {
  return absl::StrFormat("%.12g,%.12g,%d,%.12g,%.12g,%.12g,%d,%.12g,%d,%d,%d",
                         key.p, key.q, key.seed, report.mutual_information,
                         report.entropy_t, report.entropy_t1,
                         report.matching_pairs.size(), report.modularity_t1,
                         report.communities_t, report.communities_t1,
                         report.common_nodes);
}

}  // namespace community_track
