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

#include "community_track/graph.h"

#include <algorithm>
#include <utility>

#include "absl/strings/str_cat.h"

namespace community_track {

std::optional<NodeId> Snapshot::FindNode(absl::string_view external_id) const {
  auto it = index_.find(external_id);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

absl::StatusOr<Snapshot> Snapshot::FromEdges(std::span<const ExternalEdge> edges,
                                             std::string month_label) {
  SnapshotBuilder builder(std::move(month_label));
  builder.Reserve(0, edges.size());
  for (const ExternalEdge& e : edges) {
    absl::Status status = builder.AddEdge(e.a, e.b, e.weight);
    if (!status.ok()) return status;
  }
  return std::move(builder).Build();
}

Snapshot Snapshot::Unweighted() const {
  Snapshot out = *this;
  std::fill(out.csr_.weights.begin(), out.csr_.weights.end(), Weight{1});
  out.csr_.two_m = 0;
  for (NodeId u = 0; u < node_count(); ++u) {
    out.csr_.degrees[u] = csr_.offsets[u + 1] - csr_.offsets[u];
    out.csr_.two_m += out.csr_.degrees[u];
  }
  return out;
}

absl::Status Snapshot::Validate() const {
  const NodeId n = node_count();
  if (csr_.offsets.size() != size_t{n} + 1) {
    return absl::InternalError("offset table does not match node count");
  }
  if (index_.size() != n) {
    return absl::InternalError("external ids are not distinct");
  }
  for (NodeId u = 0; u < n; ++u) {
    auto it = index_.find(external_ids_[u]);
    if (it == index_.end() || it->second != u) {
      return absl::InternalError(
          absl::StrCat("external id table broken at ", external_ids_[u]));
    }
  }
  Weight degree_sum = 0;
  for (NodeId u = 0; u < n; ++u) {
    auto nbrs = neighbors(u);
    auto wts = weights(u);
    Weight degree = 0;
    for (size_t i = 0; i < nbrs.size(); ++i) {
      const NodeId v = nbrs[i];
      if (v >= n) return absl::InternalError("neighbor id out of range");
      if (v == u) {
        return absl::InternalError(
            absl::StrCat("self-loop at ", external_ids_[u]));
      }
      if (i > 0 && nbrs[i - 1] >= v) {
        return absl::InternalError(
            absl::StrCat("adjacency of ", external_ids_[u], " not sorted"));
      }
      if (wts[i] == 0) return absl::InternalError("zero edge weight");
      auto back = neighbors(v);
      auto pos = std::lower_bound(back.begin(), back.end(), u);
      if (pos == back.end() || *pos != u ||
          weights(v)[pos - back.begin()] != wts[i]) {
        return absl::InternalError(absl::StrCat(
            "asymmetric edge ", external_ids_[u], " - ", external_ids_[v]));
      }
      degree += wts[i];
    }
    if (degree != csr_.degrees[u]) {
      return absl::InternalError("stale weighted degree");
    }
    degree_sum += degree;
  }
  if (degree_sum != csr_.two_m) {
    return absl::InternalError("degree sum differs from 2m");
  }
  return absl::OkStatus();
}

SnapshotBuilder::SnapshotBuilder(std::string month_label)
    : month_label_(std::move(month_label)) {}

void SnapshotBuilder::Reserve(size_t nodes, size_t edges) {
  external_ids_.reserve(nodes);
  index_.reserve(nodes);
  edges_.reserve(edges);
}

NodeId SnapshotBuilder::AddNode(absl::string_view external_id) {
  auto [it, inserted] = index_.try_emplace(
      external_id, static_cast<NodeId>(external_ids_.size()));
  if (inserted) external_ids_.emplace_back(external_id);
  return it->second;
}

absl::Status SnapshotBuilder::AddEdge(absl::string_view a, absl::string_view b,
                                      Weight weight) {
  if (a == b) {
    return absl::InvalidArgumentError(
        absl::StrCat("self-loop on external id '", a, "'"));
  }
  if (weight == 0) {
    return absl::InvalidArgumentError(
        absl::StrCat("zero weight on edge '", a, "' - '", b, "'"));
  }
  const NodeId u = AddNode(a);
  const NodeId v = AddNode(b);
  edges_.push_back({u, v, weight});
  return absl::OkStatus();
}

absl::Status SnapshotBuilder::AddDenseEdge(NodeId u, NodeId v, Weight weight) {
  if (u >= node_count() || v >= node_count()) {
    return absl::OutOfRangeError("dense edge endpoint was never added");
  }
  if (u == v) {
    return absl::InvalidArgumentError(
        absl::StrCat("self-loop on external id '", external_ids_[u], "'"));
  }
  if (weight == 0) return absl::InvalidArgumentError("zero edge weight");
  edges_.push_back({u, v, weight});
  return absl::OkStatus();
}

absl::StatusOr<Snapshot> SnapshotBuilder::Build() && {
  const NodeId n = node_count();
  Snapshot snapshot;
  snapshot.month_label_ = std::move(month_label_);
  CsrGraph& csr = snapshot.csr_;

  csr.offsets.assign(size_t{n} + 1, 0);
  for (const DenseEdge& e : edges_) {
    ++csr.offsets[e.u + 1];
    ++csr.offsets[e.v + 1];
  }
  for (NodeId u = 0; u < n; ++u) csr.offsets[u + 1] += csr.offsets[u];
  csr.neighbors.resize(csr.offsets[n]);
  csr.weights.resize(csr.offsets[n]);
  {
    std::vector<uint64_t> cursor(csr.offsets.begin(), csr.offsets.end() - 1);
    for (const DenseEdge& e : edges_) {
      csr.neighbors[cursor[e.u]] = e.v;
      csr.weights[cursor[e.u]++] = e.weight;
      csr.neighbors[cursor[e.v]] = e.u;
      csr.weights[cursor[e.v]++] = e.weight;
    }
  }
  edges_.clear();
  edges_.shrink_to_fit();

  // Sort each row and fold repeated neighbors into one entry.
  std::vector<std::pair<NodeId, Weight>> row;
  uint64_t out = 0;
  csr.degrees.assign(n, 0);
  for (NodeId u = 0; u < n; ++u) {
    const uint64_t begin = csr.offsets[u];
    const uint64_t end = csr.offsets[u + 1];
    row.clear();
    for (uint64_t i = begin; i < end; ++i) {
      row.emplace_back(csr.neighbors[i], csr.weights[i]);
    }
    std::sort(row.begin(), row.end());
    csr.offsets[u] = out;
    for (size_t i = 0; i < row.size(); ++i) {
      if (i > 0 && row[i].first == row[i - 1].first) {
        csr.weights[out - 1] += row[i].second;
      } else {
        csr.neighbors[out] = row[i].first;
        csr.weights[out++] = row[i].second;
      }
      csr.degrees[u] += row[i].second;
    }
    csr.two_m += csr.degrees[u];
  }
  csr.offsets[n] = out;
  csr.neighbors.resize(out);
  csr.neighbors.shrink_to_fit();
  csr.weights.resize(out);
  csr.weights.shrink_to_fit();

  snapshot.external_ids_ = std::move(external_ids_);
  snapshot.index_ = std::move(index_);
  return snapshot;
}

NodeCorrespondence Correspondence(const Snapshot& t, const Snapshot& t1) {
  NodeCorrespondence result;
  for (const std::string& id : t.external_ids()) {
    if (t1.FindNode(id).has_value()) {
      result.remaining.push_back(id);
    } else {
      result.t_only.push_back(id);
    }
  }
  for (const std::string& id : t1.external_ids()) {
    if (!t.FindNode(id).has_value()) result.t1_only.push_back(id);
  }
  std::sort(result.remaining.begin(), result.remaining.end());
  std::sort(result.t_only.begin(), result.t_only.end());
  std::sort(result.t1_only.begin(), result.t1_only.end());
  return result;
}

}  // namespace community_track
