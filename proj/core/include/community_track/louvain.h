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

#ifndef COMMUNITY_TRACK_LOUVAIN_H_
#define COMMUNITY_TRACK_LOUVAIN_H_

#include <cstdint>
#include <memory>
#include <span>
#include <vector>

#include "absl/status/status.h"
#include "absl/status/statusor.h"
#include "absl/strings/string_view.h"
#include "community_track/graph.h"
#include "community_track/partition.h"

namespace community_track {

// Modularity gains are compared as the exact integer
//   2m * k_{u,c} - Sigma_tot(c) * k_u,
// which is the change in Q scaled by m^2. Equal gains therefore compare
// equal, and tie-breaking is reproducible.
using GainNumerator = __int128;

// Per-level bookkeeping of the Louvain method: the working graph, the
// community of each node and the per-community totals.
//
// Communities occupy dense slots numbered in increasing order of their
// label, so comparing slots compares labels. A node can be detached from
// every community while its next move is evaluated.
class LouvainState {
 public:
  static constexpr uint32_t kDetached = UINT32_MAX;

  // `labels[u]` is the starting community of node u. The view must outlive
  // the state.
  LouvainState(GraphView graph, std::span<const CommunityId> labels,
               CommunityId max_old_community = kNoOldCommunity);

  const GraphView& graph() const { return graph_; }
  NodeId node_count() const { return graph_.node_count(); }
  uint32_t community_count() const {
    return static_cast<uint32_t>(labels_.size());
  }
  CommunityId max_old_community() const { return max_old_community_; }

  uint32_t community_of(NodeId u) const { return community_[u]; }
  CommunityId label(uint32_t c) const { return labels_[c]; }
  bool IsOld(uint32_t c) const { return labels_[c] <= max_old_community_; }
  // Slot holding `label`, or kDetached when no node started there.
  uint32_t FindCommunity(CommunityId label) const;

  // Sigma_tot: sum of member degrees.
  Weight total(uint32_t c) const { return total_[c]; }
  // Sigma_in: sum of A_ij over member pairs, i.e. twice the internal edge
  // weight plus twice each member's loop weight.
  Weight internal(uint32_t c) const { return internal_[c]; }
  NodeId member_count(uint32_t c) const { return members_[c]; }

  double Modularity() const;

  // Edge weight between u and the members of c, excluding u's own loop.
  Weight WeightTo(NodeId u, uint32_t c) const;

  void Detach(NodeId u) { Detach(u, WeightTo(u, community_[u])); }
  void Detach(NodeId u, Weight weight_to_own);
  void Attach(NodeId u, uint32_t c) { Attach(u, c, WeightTo(u, c)); }
  void Attach(NodeId u, uint32_t c, Weight weight_to);

  // Both require u to be detached.
  GainNumerator Gain(NodeId u, uint32_t c, Weight weight_to) const;
  // Exact change of Q when detached node u joins c, compared with u sitting
  // alone in a community of its own.
  double DeltaQ(NodeId u, uint32_t c) const;
  double GainToDeltaQ(GainNumerator gain) const;

  // Current label of every node.
  std::vector<CommunityId> Labels() const;

 private:
  GraphView graph_;
  CommunityId max_old_community_;
  std::vector<uint32_t> community_;
  std::vector<CommunityId> labels_;
  std::vector<Weight> total_;
  std::vector<Weight> internal_;
  std::vector<NodeId> members_;
};

// A neighboring community considered for a node during a local move.
struct MoveCandidate {
  uint32_t community = LouvainState::kDetached;
  CommunityId label = 0;
  Weight weight_to = 0;
  GainNumerator gain = 0;
};

// Hook consulted for each visited node of phase 1. It picks the community
// the node joins; the default is plain greedy ascent.
class MoveFilter {
 public:
  virtual ~MoveFilter() = default;

  // `own` is the node's community before it was detached. `neighbors` are
  // the communities of its neighbors in increasing label order; the node's
  // own community is among them only if a neighbor belongs to it. Returning
  // own.community means "stay".
  virtual uint32_t Choose(const LouvainState& state, NodeId node,
                          const MoveCandidate& own,
                          std::span<const MoveCandidate> neighbors) = 0;

  // Called after phase 2. `super_node_of[u]` is the node of the next level
  // that contains node u of the level just finished.
  virtual void OnAggregate(std::span<const NodeId> /*super_node_of*/,
                           NodeId /*super_node_count*/) {}
};

// Highest gain wins; staying wins ties with its own gain and otherwise the
// smallest label wins. Zero-gain moves are never taken.
uint32_t ChooseGreedy(const MoveCandidate& own,
                      std::span<const MoveCandidate> neighbors);

// Phase 1: sweeps `order` repeatedly, relocating each node to the community
// picked by `filter` (greedy when null), until a sweep moves nothing.
// Returns the total number of moves.
uint64_t LocalMovePass(LouvainState& state, std::span<const NodeId> order,
                       MoveFilter* filter = nullptr);

// Phase 2: one node per non-empty community, in label order. Internal weight
// becomes the super-node's loop; the super-node keeps the community label.
struct Aggregation {
  CsrGraph graph;
  std::vector<CommunityId> labels;
  std::vector<NodeId> super_node_of;
};

Aggregation Aggregate(const LouvainState& state);

struct VisitOrder {
  enum class Kind { kAscending, kSeeded };
  Kind kind = Kind::kAscending;
  uint64_t seed = 0;
};

// Accepts "ascending" or "seeded:<seed>".
absl::StatusOr<VisitOrder> ParseVisitOrder(absl::string_view text);
std::string FormatVisitOrder(const VisitOrder& order);

struct LouvainOptions {
  VisitOrder order;
  // A level that improves Q by less than this ends the run.
  double min_improvement = 1e-9;
  int max_levels = 64;
};

struct LouvainResult {
  Partition partition;
  double modularity = 0;
  // Q after phase 1 of each level.
  std::vector<double> level_modularity;
  uint64_t moves = 0;
};

// Alternates phases 1 and 2 starting from `initial` until a level moves no
// node or stops improving Q, then projects the communities back onto the
// original nodes. Labels and the old/new marker of `initial` are preserved.
//
// A warm start (an initial partition that is not all singletons) always
// gets a second level, since a stable level 0 says nothing about merging
// whole communities.
absl::StatusOr<LouvainResult> RunLouvain(const Snapshot& graph,
                                         const Partition& initial,
                                         MoveFilter* filter = nullptr,
                                         const LouvainOptions& options = {});
absl::StatusOr<LouvainResult> RunLouvain(GraphView graph,
                                         const Partition& initial,
                                         MoveFilter* filter = nullptr,
                                         const LouvainOptions& options = {});

absl::StatusOr<double> Modularity(GraphView graph,
                                  std::span<const CommunityId> labels);
absl::StatusOr<double> Modularity(const Snapshot& graph,
                                  const Partition& partition);

}  // namespace community_track

#endif  // COMMUNITY_TRACK_LOUVAIN_H_
