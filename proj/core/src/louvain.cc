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

#include "community_track/louvain.h"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <utility>

#include "absl/strings/match.h"
#include "absl/strings/str_cat.h"
#include "community_track/random.h"

namespace community_track {

LouvainState::LouvainState(GraphView graph, std::span<const CommunityId> labels,
                           CommunityId max_old_community)
    : graph_(graph), max_old_community_(max_old_community) {
  const NodeId n = graph_.node_count();
  labels_.assign(labels.begin(), labels.end());
  std::sort(labels_.begin(), labels_.end());
  labels_.erase(std::unique(labels_.begin(), labels_.end()), labels_.end());

  const uint32_t k = community_count();
  community_.resize(n);
  total_.assign(k, 0);
  internal_.assign(k, 0);
  members_.assign(k, 0);
  for (NodeId u = 0; u < n; ++u) {
    community_[u] = FindCommunity(labels[u]);
  }
  for (NodeId u = 0; u < n; ++u) {
    const uint32_t c = community_[u];
    total_[c] += graph_.degrees[u];
    internal_[c] += 2 * graph_.loop(u);
    ++members_[c];
    auto nbrs = graph_.neighbors_of(u);
    auto wts = graph_.weights_of(u);
    for (size_t i = 0; i < nbrs.size(); ++i) {
      if (community_[nbrs[i]] == c) internal_[c] += wts[i];
    }
  }
}

uint32_t LouvainState::FindCommunity(CommunityId label) const {
  auto it = std::lower_bound(labels_.begin(), labels_.end(), label);
  if (it == labels_.end() || *it != label) return kDetached;
  return static_cast<uint32_t>(it - labels_.begin());
}

double LouvainState::Modularity() const {
  const double two_m = static_cast<double>(graph_.two_m);
  double q = 0;
  for (uint32_t c = 0; c < community_count(); ++c) {
    if (members_[c] == 0) continue;
    const double tot = static_cast<double>(total_[c]) / two_m;
    q += static_cast<double>(internal_[c]) / two_m - tot * tot;
  }
  return q;
}

Weight LouvainState::WeightTo(NodeId u, uint32_t c) const {
  Weight sum = 0;
  auto nbrs = graph_.neighbors_of(u);
  auto wts = graph_.weights_of(u);
  for (size_t i = 0; i < nbrs.size(); ++i) {
    if (community_[nbrs[i]] == c) sum += wts[i];
  }
  return sum;
}

void LouvainState::Detach(NodeId u, Weight weight_to_own) {
  const uint32_t c = community_[u];
  total_[c] -= graph_.degrees[u];
  internal_[c] -= 2 * (weight_to_own + graph_.loop(u));
  --members_[c];
  community_[u] = kDetached;
}

void LouvainState::Attach(NodeId u, uint32_t c, Weight weight_to) {
  total_[c] += graph_.degrees[u];
  internal_[c] += 2 * (weight_to + graph_.loop(u));
  ++members_[c];
  community_[u] = c;
}

GainNumerator LouvainState::Gain(NodeId u, uint32_t c, Weight weight_to) const {
  return static_cast<GainNumerator>(graph_.two_m) * weight_to -
         static_cast<GainNumerator>(total_[c]) * graph_.degrees[u];
}

double LouvainState::GainToDeltaQ(GainNumerator gain) const {
  const double two_m = static_cast<double>(graph_.two_m);
  return 2.0 * static_cast<double>(gain) / (two_m * two_m);
}

double LouvainState::DeltaQ(NodeId u, uint32_t c) const {
  return GainToDeltaQ(Gain(u, c, WeightTo(u, c)));
}

std::vector<CommunityId> LouvainState::Labels() const {
  std::vector<CommunityId> out(node_count());
  for (NodeId u = 0; u < node_count(); ++u) out[u] = labels_[community_[u]];
  return out;
}

uint32_t ChooseGreedy(const MoveCandidate& own,
                      std::span<const MoveCandidate> neighbors) {
  const MoveCandidate* best = &own;
  for (const MoveCandidate& candidate : neighbors) {
    if (candidate.gain > best->gain) best = &candidate;
  }
  return best->community;
}

uint64_t LocalMovePass(LouvainState& state, std::span<const NodeId> order,
                       MoveFilter* filter) {
  const GraphView& graph = state.graph();
  std::vector<Weight> weight_to(state.community_count(), 0);
  std::vector<uint32_t> touched;
  std::vector<MoveCandidate> candidates;
  uint64_t total_moves = 0;
  uint64_t moves = 0;
  do {
    moves = 0;
    for (NodeId u : order) {
      const uint32_t own = state.community_of(u);
      touched.clear();
      auto nbrs = graph.neighbors_of(u);
      auto wts = graph.weights_of(u);
      for (size_t i = 0; i < nbrs.size(); ++i) {
        const uint32_t c = state.community_of(nbrs[i]);
        if (weight_to[c] == 0) touched.push_back(c);
        weight_to[c] += wts[i];
      }
      std::sort(touched.begin(), touched.end());

      state.Detach(u, weight_to[own]);
      const MoveCandidate own_candidate{own, state.label(own), weight_to[own],
                                        state.Gain(u, own, weight_to[own])};
      candidates.clear();
      for (uint32_t c : touched) {
        candidates.push_back(
            {c, state.label(c), weight_to[c], state.Gain(u, c, weight_to[c])});
      }
      const uint32_t target =
          filter != nullptr
              ? filter->Choose(state, u, own_candidate, candidates)
              : ChooseGreedy(own_candidate, candidates);
      state.Attach(u, target, weight_to[target]);
      if (target != own) ++moves;

      for (uint32_t c : touched) weight_to[c] = 0;
    }
    total_moves += moves;
  } while (moves > 0);
  return total_moves;
}

Aggregation Aggregate(const LouvainState& state) {
  const GraphView& graph = state.graph();
  const NodeId n = state.node_count();
  Aggregation result;

  std::vector<NodeId> super_of_community(state.community_count(),
                                         LouvainState::kDetached);
  NodeId super_count = 0;
  for (uint32_t c = 0; c < state.community_count(); ++c) {
    if (state.member_count(c) == 0) continue;
    super_of_community[c] = super_count++;
    result.labels.push_back(state.label(c));
  }
  result.super_node_of.resize(n);
  for (NodeId u = 0; u < n; ++u) {
    result.super_node_of[u] = super_of_community[state.community_of(u)];
  }

  // Bucket the nodes of each super-node together.
  std::vector<uint64_t> start(size_t{super_count} + 1, 0);
  for (NodeId u = 0; u < n; ++u) ++start[result.super_node_of[u] + 1];
  std::partial_sum(start.begin(), start.end(), start.begin());
  std::vector<NodeId> members(n);
  {
    std::vector<uint64_t> cursor(start.begin(), start.end() - 1);
    for (NodeId u = 0; u < n; ++u) members[cursor[result.super_node_of[u]]++] = u;
  }

  CsrGraph& out = result.graph;
  out.offsets.assign(1, 0);
  out.loops.assign(super_count, 0);
  out.degrees.assign(super_count, 0);
  std::vector<Weight> row_weight(super_count, 0);
  std::vector<NodeId> touched;
  for (NodeId s = 0; s < super_count; ++s) {
    touched.clear();
    Weight internal_twice = 0;
    for (uint64_t i = start[s]; i < start[s + 1]; ++i) {
      const NodeId u = members[i];
      out.loops[s] += graph.loop(u);
      auto nbrs = graph.neighbors_of(u);
      auto wts = graph.weights_of(u);
      for (size_t j = 0; j < nbrs.size(); ++j) {
        const NodeId t = result.super_node_of[nbrs[j]];
        if (t == s) {
          internal_twice += wts[j];
          continue;
        }
        if (row_weight[t] == 0) touched.push_back(t);
        row_weight[t] += wts[j];
      }
    }
    out.loops[s] += internal_twice / 2;
    std::sort(touched.begin(), touched.end());
    Weight degree = 2 * out.loops[s];
    for (NodeId t : touched) {
      out.neighbors.push_back(t);
      out.weights.push_back(row_weight[t]);
      degree += row_weight[t];
      row_weight[t] = 0;
    }
    out.offsets.push_back(out.neighbors.size());
    out.degrees[s] = degree;
    out.two_m += degree;
  }
  return result;
}

absl::StatusOr<VisitOrder> ParseVisitOrder(absl::string_view text) {
  if (text == "ascending") return VisitOrder{};
  absl::string_view rest = text;
  if (absl::StartsWith(rest, "seeded:")) {
    rest.remove_prefix(7);
    uint64_t seed = 0;
    auto [ptr, ec] = std::from_chars(rest.data(), rest.data() + rest.size(), seed);
    if (ec == std::errc() && ptr == rest.data() + rest.size() && !rest.empty()) {
      return VisitOrder{VisitOrder::Kind::kSeeded, seed};
    }
  }
  return absl::InvalidArgumentError(absl::StrCat(
      "bad visit order '", text, "', expected ascending or seeded:<seed>"));
}

std::string FormatVisitOrder(const VisitOrder& order) {
  if (order.kind == VisitOrder::Kind::kAscending) return "ascending";
  return absl::StrCat("seeded:", order.seed);
}

absl::StatusOr<LouvainResult> RunLouvain(const Snapshot& graph,
                                         const Partition& initial,
                                         MoveFilter* filter,
                                         const LouvainOptions& options) {
  return RunLouvain(graph.view(), initial, filter, options);
}

absl::StatusOr<LouvainResult> RunLouvain(GraphView graph,
                                         const Partition& initial,
                                         MoveFilter* filter,
                                         const LouvainOptions& options) {
  if (graph.two_m == 0) {
    return absl::FailedPreconditionError(
        "modularity is undefined on a graph without edges");
  }
  if (initial.size() != graph.node_count()) {
    return absl::InvalidArgumentError(
        absl::StrCat("initial partition covers ", initial.size(),
                     " nodes, graph has ", graph.node_count()));
  }
  if (absl::Status status = initial.Validate(); !status.ok()) return status;

  const NodeId original_count = graph.node_count();
  const bool warm_start = initial.CommunityCount() < original_count;
  Rng order_rng(options.order.seed, RandomStream::kVisitOrder);

  std::vector<NodeId> current_of(original_count);
  std::iota(current_of.begin(), current_of.end(), NodeId{0});

  std::unique_ptr<CsrGraph> level_graph;
  auto state = std::make_unique<LouvainState>(graph, initial.assignment(),
                                              initial.max_old_community());
  LouvainResult result;
  double q_before = state->Modularity();
  for (int level = 0;; ++level) {
    std::vector<NodeId> order(state->node_count());
    std::iota(order.begin(), order.end(), NodeId{0});
    if (options.order.kind == VisitOrder::Kind::kSeeded) {
      order_rng.Shuffle(std::span<NodeId>(order));
    }
    const uint64_t moves = LocalMovePass(*state, order, filter);
    result.moves += moves;
    const double q_after = state->Modularity();
    result.level_modularity.push_back(q_after);

    bool another_level = moves > 0 && q_after - q_before >= options.min_improvement;
    if (level == 0 && warm_start) another_level = true;
    if (!another_level || level + 1 >= options.max_levels) break;

    Aggregation aggregation = Aggregate(*state);
    for (NodeId& node : current_of) node = aggregation.super_node_of[node];
    if (filter != nullptr) {
      filter->OnAggregate(aggregation.super_node_of,
                          static_cast<NodeId>(aggregation.labels.size()));
    }
    auto next_graph = std::make_unique<CsrGraph>(std::move(aggregation.graph));
    state = std::make_unique<LouvainState>(next_graph->view(), aggregation.labels,
                                           initial.max_old_community());
    level_graph = std::move(next_graph);
    q_before = q_after;
  }

  std::vector<CommunityId> labels(original_count);
  for (NodeId u = 0; u < original_count; ++u) {
    labels[u] = state->label(state->community_of(current_of[u]));
  }
  result.partition = Partition(std::move(labels), initial.max_old_community());
  result.modularity = result.level_modularity.back();
  return result;
}

absl::StatusOr<double> Modularity(GraphView graph,
                                  std::span<const CommunityId> labels) {
  if (graph.two_m == 0) {
    return absl::FailedPreconditionError(
        "modularity is undefined on a graph without edges");
  }
  if (labels.size() != graph.node_count()) {
    return absl::InvalidArgumentError("partition does not cover the graph");
  }
  return LouvainState(graph, labels).Modularity();
}

absl::StatusOr<double> Modularity(const Snapshot& graph,
                                  const Partition& partition) {
  return Modularity(graph.view(), partition.assignment());
}

}  // namespace community_track
