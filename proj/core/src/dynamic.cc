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

#include "community_track/dynamic.h"

#include <algorithm>
#include <cmath>
#include <utility>

#include "absl/strings/str_cat.h"
#include "community_track/random.h"

namespace community_track {
namespace {

absl::Status CheckProbability(const char* name, double value) {
  if (!(value >= 0.0 && value <= 1.0)) {
    return absl::InvalidArgumentError(
        absl::StrCat(name, " must lie in [0, 1], got ", value));
  }
  return absl::OkStatus();
}

// Marks round(rate * |pool|) members of `pool`, chosen uniformly.
void MarkExactCount(std::vector<NodeId> pool, double rate, Rng& rng,
                    std::vector<uint8_t>& marks) {
  const size_t count = static_cast<size_t>(
      std::llround(rate * static_cast<double>(pool.size())));
  for (size_t i = 0; i < count; ++i) {
    const size_t j = i + rng.Below(pool.size() - i);
    std::swap(pool[i], pool[j]);
    marks[pool[i]] = 1;
  }
}

}  // namespace

absl::Status DynamicParams::Validate() const {
  if (absl::Status s = CheckProbability("p", p); !s.ok()) return s;
  if (absl::Status s = CheckProbability("q", q); !s.ok()) return s;
  return CheckProbability("free_rate", free_rate);
}

size_t NodeFlags::FixedCount() const {
  return std::count(is_fixed.begin(), is_fixed.end(), 1);
}

size_t NodeFlags::PreferentialCount() const {
  return std::count(is_preferential.begin(), is_preferential.end(), 1);
}

Partition LmagInit(const Snapshot& snapshot_t1,
                   const ExternalPartition& partition_t, double free_rate,
                   uint64_t seed, std::span<const uint8_t> never_free) {
  const CommunityId max_old = partition_t.MaxCommunityId();
  CommunityId available = max_old + 1;
  Rng rng(seed, RandomStream::kFreeNodes);
  std::vector<CommunityId> assignment(snapshot_t1.node_count());
  for (NodeId u = 0; u < snapshot_t1.node_count(); ++u) {
    auto it = partition_t.communities.find(snapshot_t1.external_id(u));
    if (it != partition_t.communities.end()) {
      // One draw per returning node keeps the stream aligned regardless of
      // which nodes are exempt.
      const bool drawn_free = rng.Bernoulli(free_rate);
      const bool exempt = !never_free.empty() && never_free[u] != 0;
      if (exempt || !drawn_free) {
        assignment[u] = it->second;
        continue;
      }
    }
    assignment[u] = available++;
  }
  return Partition(std::move(assignment), max_old);
}

NodeFlags SampleFlags(const Snapshot& snapshot_t1,
                      const ExternalPartition& partition_t,
                      const DynamicParams& params) {
  const NodeId n = snapshot_t1.node_count();
  NodeFlags flags;
  flags.is_fixed.assign(n, 0);
  flags.is_preferential.assign(n, 0);
  flags.old_community.assign(n, kNoOldCommunity);

  std::vector<NodeId> remaining;
  for (NodeId u = 0; u < n; ++u) {
    auto it = partition_t.communities.find(snapshot_t1.external_id(u));
    if (it == partition_t.communities.end()) continue;
    flags.old_community[u] = it->second;
    remaining.push_back(u);
  }

  Rng fixed_rng(params.seed, RandomStream::kFixedNodes);
  Rng preferential_rng(params.seed, RandomStream::kPreferentialNodes);
  if (params.exact_count_sampling) {
    MarkExactCount(remaining, params.p, fixed_rng, flags.is_fixed);
    std::vector<NodeId> everyone(n);
    for (NodeId u = 0; u < n; ++u) everyone[u] = u;
    MarkExactCount(std::move(everyone), params.q, preferential_rng,
                   flags.is_preferential);
  } else {
    for (NodeId u : remaining) flags.is_fixed[u] = fixed_rng.Bernoulli(params.p);
    for (NodeId u = 0; u < n; ++u) {
      flags.is_preferential[u] = preferential_rng.Bernoulli(params.q);
    }
  }
  return flags;
}

DynamicMoveFilter::DynamicMoveFilter(const NodeFlags& flags,
                                     bool q_first_level_only)
    : fixed_(flags.is_fixed),
      preferential_(flags.is_preferential),
      q_first_level_only_(q_first_level_only) {}

uint32_t DynamicMoveFilter::Choose(const LouvainState& state, NodeId node,
                                   const MoveCandidate& own,
                                   std::span<const MoveCandidate> neighbors) {
  if (fixed_[node]) return own.community;

  const bool preferential =
      preferential_[node] && !(q_first_level_only_ && level_ > 0);
  if (preferential) {
    const MoveCandidate* best_old = nullptr;
    for (const MoveCandidate& candidate : neighbors) {
      if (!state.IsOld(candidate.community)) continue;
      if (best_old == nullptr || candidate.gain > best_old->gain) {
        best_old = &candidate;
      }
    }
    // With no neighbor in an old community the node proceeds as usual.
    if (best_old != nullptr) {
      return best_old->gain > own.gain ? best_old->community : own.community;
    }
  }
  return ChooseGreedy(own, neighbors);
}

void DynamicMoveFilter::OnAggregate(std::span<const NodeId> super_node_of,
                                    NodeId super_node_count) {
  std::vector<uint8_t> fixed(super_node_count, 0);
  std::vector<uint8_t> preferential(super_node_count, 0);
  for (size_t u = 0; u < super_node_of.size(); ++u) {
    fixed[super_node_of[u]] |= fixed_[u];
    preferential[super_node_of[u]] |= preferential_[u];
  }
  fixed_ = std::move(fixed);
  preferential_ = std::move(preferential);
  ++level_;
}

absl::StatusOr<EvolveResult> Evolve(const Snapshot& snapshot_t1,
                                    const ExternalPartition& partition_t,
                                    const DynamicParams& params) {
  if (absl::Status s = params.Validate(); !s.ok()) return s;

  EvolveResult result;
  result.flags = SampleFlags(snapshot_t1, partition_t, params);
  const Partition initial = LmagInit(snapshot_t1, partition_t, params.free_rate,
                                     params.seed, result.flags.is_fixed);
  DynamicMoveFilter filter(result.flags, params.q_first_level_only);
  LouvainOptions options;
  options.order = params.order;
  absl::StatusOr<LouvainResult> louvain =
      RunLouvain(snapshot_t1, initial, &filter, options);
  if (!louvain.ok()) return louvain.status();
  result.partition = std::move(louvain->partition);
  result.modularity = louvain->modularity;
  result.levels = filter.level() + 1;
  return result;
}

}  // namespace community_track
