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

#include <random>
#include <vector>

#include "gmock/gmock.h"
#include "gtest/gtest.h"
#include "community_track/partition.h"
#include "test_support.h"

namespace community_track {
namespace {

using ::testing::ElementsAre;
using ::testing::HasSubstr;
using ::testing::IsEmpty;

TEST(SnapshotTest, BuildsFromEdges) {
  std::vector<ExternalEdge> edges = {{"A", "B", 2}, {"B", "C", 1}};
  absl::StatusOr<Snapshot> s = Snapshot::FromEdges(edges, "2012-03");
  ASSERT_TRUE(s.ok()) << s.status();
  EXPECT_EQ(s->node_count(), 3);
  EXPECT_EQ(s->edge_count(), 2);
  EXPECT_EQ(s->total_weight(), 3);
  EXPECT_EQ(s->month_label(), "2012-03");
  EXPECT_THAT(testing::Vec(s->external_ids()), ElementsAre("A", "B", "C"));
  EXPECT_THAT(testing::Vec(s->neighbors(1)), ElementsAre(0, 2));
  EXPECT_THAT(testing::Vec(s->weights(1)), ElementsAre(2, 1));
  EXPECT_EQ(s->weighted_degree(1), 3);
  EXPECT_TRUE(s->Validate().ok());
}

TEST(SnapshotTest, AccumulatesRepeatedPairs) {
  std::vector<ExternalEdge> edges = {{"A", "B", 1}, {"B", "A", 1}};
  absl::StatusOr<Snapshot> s = Snapshot::FromEdges(edges, "");
  ASSERT_TRUE(s.ok());
  EXPECT_EQ(s->edge_count(), 1);
  EXPECT_THAT(testing::Vec(s->weights(0)), ElementsAre(2));
  EXPECT_EQ(s->total_weight(), 2);
}

TEST(SnapshotTest, RejectsSelfLoopNamingTheId) {
  std::vector<ExternalEdge> edges = {{"A", "A", 1}};
  absl::StatusOr<Snapshot> s = Snapshot::FromEdges(edges, "");
  ASSERT_FALSE(s.ok());
  EXPECT_EQ(s.status().code(), absl::StatusCode::kInvalidArgument);
  EXPECT_THAT(std::string(s.status().message()), HasSubstr("'A'"));
}

TEST(SnapshotTest, RejectsZeroWeight) {
  std::vector<ExternalEdge> edges = {{"A", "B", 0}};
  EXPECT_FALSE(Snapshot::FromEdges(edges, "").ok());
}

TEST(SnapshotTest, EmptyInputGivesEmptySnapshot) {
  absl::StatusOr<Snapshot> s = Snapshot::FromEdges(std::vector<ExternalEdge>{}, "");
  ASSERT_TRUE(s.ok());
  EXPECT_EQ(s->node_count(), 0);
  EXPECT_EQ(s->total_weight(), 0);
  EXPECT_TRUE(s->Validate().ok());
}

TEST(SnapshotTest, FindNode) {
  std::vector<ExternalEdge> edges = {{"x", "y", 1}};
  Snapshot s = *Snapshot::FromEdges(edges, "");
  EXPECT_EQ(s.FindNode("y"), NodeId{1});
  EXPECT_FALSE(s.FindNode("z").has_value());
}

TEST(SnapshotTest, UnweightedCollapsesWeights) {
  std::vector<ExternalEdge> edges = {{"A", "B", 5}, {"B", "C", 2}};
  Snapshot s = Snapshot::FromEdges(edges, "")->Unweighted();
  EXPECT_EQ(s.total_weight(), 2);
  EXPECT_THAT(testing::Vec(s.weights(1)), ElementsAre(1, 1));
  EXPECT_TRUE(s.Validate().ok());
}

TEST(SnapshotTest, RandomSnapshotsSatisfyInvariants) {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> pick(0, 39);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<ExternalEdge> edges;
    for (int i = 0; i < 120; ++i) {
      int a = pick(rng), b = pick(rng);
      if (a == b) continue;
      edges.push_back({"s" + std::to_string(a), "s" + std::to_string(b),
                       static_cast<Weight>(1 + pick(rng) % 4)});
    }
    absl::StatusOr<Snapshot> s = Snapshot::FromEdges(edges, "");
    ASSERT_TRUE(s.ok());
    ASSERT_TRUE(s->Validate().ok()) << s->Validate();
    Weight input_total = 0;
    for (const ExternalEdge& e : edges) input_total += e.weight;
    EXPECT_EQ(s->total_weight(), input_total);
    Weight degree_sum = 0;
    for (NodeId u = 0; u < s->node_count(); ++u) degree_sum += s->weighted_degree(u);
    EXPECT_EQ(degree_sum, 2 * s->total_weight());
  }
}

TEST(CorrespondenceTest, PartialOverlap) {
  Snapshot t = *Snapshot::FromEdges(std::vector<ExternalEdge>{{"A", "B", 1}, {"B", "C", 1}}, "");
  Snapshot t1 = *Snapshot::FromEdges(std::vector<ExternalEdge>{{"B", "C", 1}, {"C", "D", 1}}, "");
  NodeCorrespondence c = Correspondence(t, t1);
  EXPECT_THAT(c.remaining, ElementsAre("B", "C"));
  EXPECT_THAT(c.t_only, ElementsAre("A"));
  EXPECT_THAT(c.t1_only, ElementsAre("D"));
}

TEST(CorrespondenceTest, IdenticalSnapshots) {
  Snapshot t = *Snapshot::FromEdges(std::vector<ExternalEdge>{{"A", "B", 1}, {"B", "C", 1}}, "");
  NodeCorrespondence c = Correspondence(t, t);
  EXPECT_THAT(c.remaining, ElementsAre("A", "B", "C"));
  EXPECT_THAT(c.t_only, IsEmpty());
  EXPECT_THAT(c.t1_only, IsEmpty());
}

TEST(CorrespondenceTest, DisjointSnapshots) {
  Snapshot t = *Snapshot::FromEdges(std::vector<ExternalEdge>{{"A", "B", 1}}, "");
  Snapshot t1 = *Snapshot::FromEdges(std::vector<ExternalEdge>{{"C", "D", 1}}, "");
  NodeCorrespondence c = Correspondence(t, t1);
  EXPECT_THAT(c.remaining, IsEmpty());
  EXPECT_THAT(c.t_only, ElementsAre("A", "B"));
  EXPECT_THAT(c.t1_only, ElementsAre("C", "D"));
}

TEST(PartitionTest, SizesAgreeWithAssignment) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 20; ++trial) {
    Partition p(testing::RandomLabels(rng, 50, 7));
    uint64_t total = 0;
    for (const auto& [c, size] : p.CommunitySizes()) {
      EXPECT_EQ(size, static_cast<uint64_t>(std::count(
                          p.assignment().begin(), p.assignment().end(), c)));
      total += size;
    }
    EXPECT_EQ(total, 50u);
    EXPECT_EQ(p.CommunityCount(), p.CommunitySizes().size());
  }
}

TEST(PartitionTest, CompactedRelabelsBySmallestMember) {
  Partition p({7, 3, 7, 9, 3}, 8);
  Partition c = p.Compacted();
  EXPECT_THAT(testing::Vec(c.assignment()), ElementsAre(0, 1, 0, 2, 1));
  EXPECT_EQ(c.max_old_community(), kNoOldCommunity);
}

TEST(PartitionTest, OldAndNewIds) {
  Partition p({0, 4, 5}, 4);
  EXPECT_TRUE(p.IsOld(4));
  EXPECT_FALSE(p.IsOld(5));
  EXPECT_FALSE(Partition({0, 1}).IsOld(0));
}

TEST(PartitionTest, NegativeIdsAreInvalid) {
  EXPECT_FALSE(Partition({0, -2}).Validate().ok());
  EXPECT_TRUE(Partition({0, 2}).Validate().ok());
}

TEST(PartitionTest, AlignsOnCommonNodes) {
  Snapshot t1 = *Snapshot::FromEdges(std::vector<ExternalEdge>{{"B", "C", 1}, {"C", "D", 1}}, "");
  ExternalPartition old;
  old.communities = {{"A", 1}, {"B", 2}, {"C", 3}};
  AlignedLabels aligned = AlignOnCommonNodes(old, t1, Partition({10, 11, 12}));
  EXPECT_THAT(aligned.t, ElementsAre(2, 3));
  EXPECT_THAT(aligned.t1, ElementsAre(10, 11));
}

}  // namespace
}  // namespace community_track
