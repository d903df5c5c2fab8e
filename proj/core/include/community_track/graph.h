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

#ifndef COMMUNITY_TRACK_GRAPH_H_
#define COMMUNITY_TRACK_GRAPH_H_

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "absl/container/flat_hash_map.h"
#include "absl/status/status.h"
#include "absl/status/statusor.h"
#include "absl/strings/string_view.h"

namespace community_track {

using NodeId = uint32_t;
using Weight = uint64_t;

// Undirected edge between two subscribers, identified by external id.
struct ExternalEdge {
  std::string a;
  std::string b;
  Weight weight = 1;

  friend bool operator==(const ExternalEdge&, const ExternalEdge&) = default;
};

// Read-only view of a weighted undirected graph in CSR form. `loops` holds
// the weight of each node's self-loop as an edge weight, so a loop of weight
// w contributes 2w to the node's degree; it is empty when the graph has none.
struct GraphView {
  std::span<const uint64_t> offsets;
  std::span<const NodeId> neighbors;
  std::span<const Weight> weights;
  std::span<const Weight> loops;
  std::span<const Weight> degrees;
  Weight two_m = 0;

  NodeId node_count() const {
    return offsets.empty() ? 0 : static_cast<NodeId>(offsets.size() - 1);
  }
  std::span<const NodeId> neighbors_of(NodeId u) const {
    return neighbors.subspan(offsets[u], offsets[u + 1] - offsets[u]);
  }
  std::span<const Weight> weights_of(NodeId u) const {
    return weights.subspan(offsets[u], offsets[u + 1] - offsets[u]);
  }
  Weight loop(NodeId u) const { return loops.empty() ? 0 : loops[u]; }
};

// Owning CSR storage behind a GraphView.
struct CsrGraph {
  std::vector<uint64_t> offsets{0};
  std::vector<NodeId> neighbors;
  std::vector<Weight> weights;
  std::vector<Weight> loops;
  std::vector<Weight> degrees;
  Weight two_m = 0;

  GraphView view() const {
    return {offsets, neighbors, weights, loops, degrees, two_m};
  }
};

// One month of the social graph: an undirected weighted simple graph over
// dense node ids, with the original subscriber ids kept in a side table.
//
// Adjacency rows are sorted by neighbor id and symmetric; there are no
// self-loops. Immutable once built.
class Snapshot {
 public:
  Snapshot() = default;

  // Builds a snapshot from undirected edges. Dense ids follow the order in
  // which external ids first appear; repeated pairs accumulate weight.
  static absl::StatusOr<Snapshot> FromEdges(std::span<const ExternalEdge> edges,
                                            std::string month_label);

  const std::string& month_label() const { return month_label_; }
  NodeId node_count() const { return static_cast<NodeId>(external_ids_.size()); }
  // Number of undirected edges.
  uint64_t edge_count() const { return csr_.neighbors.size() / 2; }
  // The quantity m: every undirected edge weight counted once.
  Weight total_weight() const { return csr_.two_m / 2; }

  std::span<const NodeId> neighbors(NodeId u) const {
    return view().neighbors_of(u);
  }
  std::span<const Weight> weights(NodeId u) const {
    return view().weights_of(u);
  }
  Weight weighted_degree(NodeId u) const { return csr_.degrees[u]; }

  const std::string& external_id(NodeId u) const { return external_ids_[u]; }
  std::span<const std::string> external_ids() const { return external_ids_; }
  std::optional<NodeId> FindNode(absl::string_view external_id) const;

  GraphView view() const { return csr_.view(); }

  // Same topology with every weight set to 1.
  Snapshot Unweighted() const;

  // Re-checks symmetry, ordering, the id table and the degree sums.
  absl::Status Validate() const;

 private:
  friend class SnapshotBuilder;

  std::string month_label_;
  std::vector<std::string> external_ids_;
  absl::flat_hash_map<std::string, NodeId> index_;
  CsrGraph csr_;
};

// Incremental construction of a Snapshot. External ids are interned on first
// sight; dense edges may be added directly once their endpoints are known.
class SnapshotBuilder {
 public:
  explicit SnapshotBuilder(std::string month_label = "");

  NodeId AddNode(absl::string_view external_id);
  absl::Status AddEdge(absl::string_view a, absl::string_view b, Weight weight);
  absl::Status AddDenseEdge(NodeId u, NodeId v, Weight weight);
  void Reserve(size_t nodes, size_t edges);

  NodeId node_count() const { return static_cast<NodeId>(external_ids_.size()); }

  absl::StatusOr<Snapshot> Build() &&;

 private:
  struct DenseEdge {
    NodeId u;
    NodeId v;
    Weight weight;
  };

  std::string month_label_;
  std::vector<std::string> external_ids_;
  absl::flat_hash_map<std::string, NodeId> index_;
  std::vector<DenseEdge> edges_;
};

// Node sets of two snapshots compared by external id. Each list is sorted.
struct NodeCorrespondence {
  std::vector<std::string> remaining;
  std::vector<std::string> t_only;
  std::vector<std::string> t1_only;
};

NodeCorrespondence Correspondence(const Snapshot& t, const Snapshot& t1);

}  // namespace community_track

#endif  // COMMUNITY_TRACK_GRAPH_H_
