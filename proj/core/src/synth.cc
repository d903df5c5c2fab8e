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

#include "community_track/synth.h"

#include <algorithm>
#include <cmath>
#include <map>
#include <utility>

#include "absl/strings/str_cat.h"
#include "community_track/random.h"

namespace community_track {
namespace {

using SlotEdge = std::pair<uint32_t, uint32_t>;

std::string NodeName(uint64_t index) { return absl::StrCat("v", index); }

// Bernoulli(p) over `count` positions, calling visit(i) for each success in
// increasing order.
template <typename Visit>
void SampleSparse(uint64_t count, double p, Rng& rng, Visit visit) {
  if (p <= 0.0 || count == 0) return;
  if (p >= 1.0) {
    for (uint64_t i = 0; i < count; ++i) visit(i);
    return;
  }
  uint64_t i = rng.GeometricSkip(p);
  while (i < count) {
    visit(i);
    const uint64_t skip = rng.GeometricSkip(p);
    if (skip >= count - i) break;
    i += skip + 1;
  }
}

// Independent edges: p_in between members of one community, p_out across.
std::vector<SlotEdge> SampleEdges(const std::vector<int>& label_of_slot,
                                  int communities, double p_in, double p_out,
                                  Rng& rng) {
  std::vector<std::vector<uint32_t>> members(communities);
  for (uint32_t s = 0; s < label_of_slot.size(); ++s) {
    members[label_of_slot[s]].push_back(s);
  }
  std::vector<SlotEdge> edges;
  for (const std::vector<uint32_t>& block : members) {
    const uint64_t size = block.size();
    if (size < 2) continue;
    // Walk the strict upper triangle row by row.
    uint64_t row = 0;
    uint64_t row_start = 0;
    SampleSparse(size * (size - 1) / 2, p_in, rng, [&](uint64_t index) {
      while (index - row_start >= size - 1 - row) {
        row_start += size - 1 - row;
        ++row;
      }
      const uint64_t column = row + 1 + (index - row_start);
      edges.emplace_back(block[row], block[column]);
    });
  }
  for (int a = 0; a < communities; ++a) {
    for (int b = a + 1; b < communities; ++b) {
      const std::vector<uint32_t>& left = members[a];
      const std::vector<uint32_t>& right = members[b];
      SampleSparse(left.size() * right.size(), p_out, rng, [&](uint64_t index) {
        edges.emplace_back(left[index / right.size()],
                           right[index % right.size()]);
      });
    }
  }
  return edges;
}

// Nodes enter in slot order; slots without edges are left out.
absl::StatusOr<Snapshot> BuildFromSlots(const std::vector<std::string>& names,
                                        const std::vector<SlotEdge>& edges,
                                        std::string label) {
  std::vector<uint8_t> touched(names.size(), 0);
  for (const auto& [u, v] : edges) touched[u] = touched[v] = 1;
  SnapshotBuilder builder(std::move(label));
  builder.Reserve(names.size(), edges.size());
  std::vector<NodeId> dense(names.size(), 0);
  for (size_t s = 0; s < names.size(); ++s) {
    if (touched[s]) dense[s] = builder.AddNode(names[s]);
  }
  for (const auto& [u, v] : edges) {
    absl::Status status = builder.AddDenseEdge(dense[u], dense[v], 1);
    if (!status.ok()) return status;
  }
  return std::move(builder).Build();
}

std::vector<int> PlantLabels(const PlantedConfig& config, Rng& rng) {
  std::vector<int> labels;
  for (int c = 0; c < config.communities; ++c) {
    int size = config.size;
    if (config.size_jitter > 0) {
      size += static_cast<int>(rng.Below(2 * config.size_jitter + 1)) -
              config.size_jitter;
    }
    labels.insert(labels.end(), std::max(size, 1), c);
  }
  return labels;
}

ExternalPartition TruthOf(const std::vector<std::string>& names,
                          const std::vector<int>& labels) {
  ExternalPartition truth;
  for (size_t s = 0; s < names.size(); ++s) {
    truth.communities.emplace(names[s], labels[s]);
  }
  return truth;
}

// Picks round(fraction * pool.size()) distinct entries of `pool`.
std::vector<uint32_t> PickFraction(std::vector<uint32_t> pool, double fraction,
                                   Rng& rng) {
  const size_t count = static_cast<size_t>(
      std::llround(fraction * static_cast<double>(pool.size())));
  for (size_t i = 0; i < count; ++i) {
    std::swap(pool[i], pool[i + rng.Below(pool.size() - i)]);
  }
  pool.resize(count);
  std::sort(pool.begin(), pool.end());
  return pool;
}

}  // namespace

absl::Status PlantedConfig::Validate() const {
  if (communities < 1 || size < 1 || size_jitter < 0 || size_jitter >= size) {
    return absl::InvalidArgumentError(
        "need communities >= 1, size >= 1 and 0 <= jitter < size");
  }
  for (double value : {p_in, p_out, churn, migration}) {
    if (!(value >= 0.0 && value <= 1.0)) {
      return absl::InvalidArgumentError(
          "probabilities and fractions must lie in [0, 1]");
    }
  }
  if (!(p_in > p_out)) {
    return absl::InvalidArgumentError("p_in must exceed p_out");
  }
  return absl::OkStatus();
}

absl::StatusOr<Snapshot> GeneratePlantedGraph(const PlantedConfig& config,
                                              ExternalPartition* truth) {
  if (absl::Status s = config.Validate(); !s.ok()) return s;
  Rng rng(config.seed, RandomStream::kSynthetic);
  const std::vector<int> labels = PlantLabels(config, rng);
  std::vector<std::string> names(labels.size());
  for (size_t s = 0; s < labels.size(); ++s) names[s] = NodeName(s);
  const std::vector<SlotEdge> edges =
      SampleEdges(labels, config.communities, config.p_in, config.p_out, rng);
  if (truth != nullptr) *truth = TruthOf(names, labels);
  return BuildFromSlots(names, edges, "T");
}

absl::StatusOr<PlantedPair> GeneratePlantedPair(const PlantedConfig& config) {
  if (absl::Status s = config.Validate(); !s.ok()) return s;
  Rng rng(config.seed, RandomStream::kSynthetic);
  const std::vector<int> labels_t = PlantLabels(config, rng);
  const size_t n = labels_t.size();
  std::vector<std::string> names_t(n);
  for (size_t s = 0; s < n; ++s) names_t[s] = NodeName(s);
  const std::vector<SlotEdge> edges_t =
      SampleEdges(labels_t, config.communities, config.p_in, config.p_out, rng);

  std::vector<uint32_t> all_slots(n);
  for (uint32_t s = 0; s < n; ++s) all_slots[s] = s;
  const std::vector<uint32_t> replaced = PickFraction(all_slots, config.churn, rng);
  std::vector<uint8_t> is_replaced(n, 0);
  for (uint32_t s : replaced) is_replaced[s] = 1;

  std::vector<std::string> names_t1 = names_t;
  for (size_t i = 0; i < replaced.size(); ++i) {
    names_t1[replaced[i]] = NodeName(n + i);
  }
  std::vector<int> labels_t1 = labels_t;
  if (config.communities > 1) {
    std::vector<uint32_t> survivors;
    for (uint32_t s = 0; s < n; ++s) {
      if (!is_replaced[s]) survivors.push_back(s);
    }
    for (uint32_t s : PickFraction(survivors, config.migration, rng)) {
      const int shift = 1 + static_cast<int>(rng.Below(config.communities - 1));
      labels_t1[s] = (labels_t[s] + shift) % config.communities;
    }
  }
  const std::vector<SlotEdge> edges_t1 = SampleEdges(
      labels_t1, config.communities, config.p_in, config.p_out, rng);

  PlantedPair pair;
  absl::StatusOr<Snapshot> t = BuildFromSlots(names_t, edges_t, "T");
  if (!t.ok()) return t.status();
  absl::StatusOr<Snapshot> t1 = BuildFromSlots(names_t1, edges_t1, "T+1");
  if (!t1.ok()) return t1.status();
  pair.t = *std::move(t);
  pair.t1 = *std::move(t1);
  pair.truth_t = TruthOf(names_t, labels_t);
  pair.truth_t1 = TruthOf(names_t1, labels_t1);
  return pair;
}

void WriteTruth(const PlantedPair& pair, std::ostream& out) {
  std::map<std::string, std::pair<std::string, std::string>> rows;
  for (const auto& [id, label] : pair.truth_t.communities) {
    rows[id] = {absl::StrCat(label), "-"};
  }
  for (const auto& [id, label] : pair.truth_t1.communities) {
    auto [it, inserted] = rows.try_emplace(id, "-", "");
    it->second.second = absl::StrCat(label);
  }
  out << "#external_id\tlabel_t\tlabel_t1\n";
  for (const auto& [id, labels] : rows) {
    out << id << '\t' << labels.first << '\t' << labels.second << '\n';
  }
}

}  // namespace community_track
