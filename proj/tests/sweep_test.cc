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

#include "community_track/sweep.h"

#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <string>
#include <vector>

#include "gmock/gmock.h"
#include "gtest/gtest.h"
#include "community_track/louvain.h"
#include "community_track/synth.h"
#include "test_support.h"

namespace community_track {
namespace {

using ::testing::ElementsAre;
using ::testing::HasSubstr;
using ::testing::StartsWith;

struct Fixture {
  PlantedPair pair;
  ExternalPartition partition_t;
};

Fixture DefaultPair(uint64_t seed) {
  PlantedConfig config;
  config.seed = seed;
  Fixture f{*GeneratePlantedPair(config), {}};
  Partition gamma =
      RunLouvain(f.pair.t, Partition::Singletons(f.pair.t.node_count()))->partition;
  f.partition_t = ToExternal(f.pair.t, gamma.Compacted());
  f.partition_t.max_old_community = f.partition_t.MaxCommunityId();
  return f;
}

TEST(SweepSpecTest, Validate) {
  SweepSpec spec;
  spec.p_values = {0};
  spec.q_values = {0};
  EXPECT_TRUE(spec.Validate().ok());
  spec.seeds = 0;
  EXPECT_FALSE(spec.Validate().ok());
  spec.seeds = 1;
  spec.q_values.clear();
  EXPECT_FALSE(spec.Validate().ok());
  spec.q_values = {1.2};
  EXPECT_FALSE(spec.Validate().ok());
  spec.q_values = {0.5};
  spec.match_threshold = 0.5;
  EXPECT_FALSE(spec.Validate().ok());
}

TEST(SweepSpecTest, DefaultGridIsPercentSteps) {
  std::vector<double> grid = DefaultGrid();
  ASSERT_EQ(grid.size(), 11u);
  EXPECT_EQ(grid.front(), 0.0);
  EXPECT_EQ(grid[3], 0.3);
  EXPECT_EQ(grid.back(), 1.0);
}

TEST(RunSweepTest, FixingEverythingOnIdenticalSnapshotsKeepsEntropy) {
  Fixture f = DefaultPair(2);
  SweepSpec spec;
  spec.p_values = {0, 1};
  spec.q_values = {0};
  spec.seeds = 3;
  std::vector<SweepRow> rows = *RunSweep(f.pair.t, f.partition_t, spec);
  ASSERT_EQ(rows.size(), 6u);
  for (const SweepRow& row : rows) {
    if (row.key.p == 1) {
      EXPECT_NEAR(row.report.mutual_information, row.report.entropy_t, 1e-12);
    } else {
      EXPECT_LE(row.report.mutual_information, row.report.entropy_t + 1e-12);
    }
  }
}

TEST(RunSweepTest, SingleCellMatchesManualComposition) {
  Fixture f = DefaultPair(3);
  SweepSpec spec;
  spec.p_values = {0};
  spec.q_values = {0};
  spec.seed_base = 11;
  std::vector<SweepRow> rows = *RunSweep(f.pair.t1, f.partition_t, spec);
  ASSERT_EQ(rows.size(), 1u);

  DynamicParams params;
  params.seed = 11;
  EvolveResult evolved = *Evolve(f.pair.t1, f.partition_t, params);
  EvolutionReport manual = *BuildReport(f.pair.t1, f.partition_t, evolved.partition);
  EXPECT_EQ(FormatReportRow(rows[0].key, rows[0].report),
            FormatReportRow({0, 0, 11}, manual));
}

TEST(RunSweepTest, OrderedAndIndependentOfThreadCount) {
  Fixture f = DefaultPair(4);
  SweepSpec spec;
  spec.p_values = {1, 0.5, 0};
  spec.q_values = {0.5, 0};
  spec.seeds = 2;
  spec.threads = 1;
  std::vector<SweepRow> serial = *RunSweep(f.pair.t1, f.partition_t, spec);
  spec.threads = 4;
  std::vector<SweepRow> parallel = *RunSweep(f.pair.t1, f.partition_t, spec);
  ASSERT_EQ(serial.size(), 12u);
  ASSERT_EQ(parallel.size(), 12u);
  for (size_t i = 0; i < serial.size(); ++i) {
    EXPECT_EQ(FormatReportRow(serial[i].key, serial[i].report),
              FormatReportRow(parallel[i].key, parallel[i].report));
  }
  EXPECT_EQ(serial.front().key.p, 0);
  EXPECT_EQ(serial.front().key.q, 0);
  EXPECT_EQ(serial.back().key.p, 1);
  EXPECT_EQ(serial.back().key.q, 0.5);
  EXPECT_EQ(serial[1].key.seed, 1u);
}

TEST(RunSweepTest, FailingCellIsNamed) {
  Snapshot empty = testing::MakeSnapshot(3, {});
  ExternalPartition prev;
  prev.communities["n0"] = 0;
  SweepSpec spec;
  spec.p_values = {0.5};
  spec.q_values = {0};
  spec.seed_base = 9;
  absl::StatusOr<std::vector<SweepRow>> rows = RunSweep(empty, prev, spec);
  ASSERT_FALSE(rows.ok());
  EXPECT_THAT(std::string(rows.status().message()), HasSubstr("p=0.5 q=0 seed=9"));
}

TEST(RunSweepTest, FullDefaultGridFitsTimeBudget) {
  Fixture f = DefaultPair(6);
  SweepSpec spec;
  spec.p_values = DefaultGrid();
  spec.q_values = DefaultGrid();
  spec.seeds = 5;
  const auto start = std::chrono::steady_clock::now();
  absl::StatusOr<std::vector<SweepRow>> rows = RunSweep(f.pair.t1, f.partition_t, spec);
  const double seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  ASSERT_TRUE(rows.ok());
  EXPECT_EQ(rows->size(), 605u);
  EXPECT_LT(seconds, 300.0);
}

TEST(SummarizeTest, MeansOverSeeds) {
  std::vector<SweepRow> rows(3);
  rows[0].key = {0, 0, 1};
  rows[0].report.mutual_information = 1;
  rows[0].report.matching_pairs.resize(2);
  rows[1].key = {0, 0, 2};
  rows[1].report.mutual_information = 2;
  rows[2].key = {1, 0, 1};
  rows[2].report.modularity_t1 = 0.5;
  std::vector<SweepCell> cells = Summarize(rows);
  ASSERT_EQ(cells.size(), 2u);
  EXPECT_EQ(cells[0].mutual_information, 1.5);
  EXPECT_EQ(cells[0].matching_count, 1.0);
  EXPECT_EQ(cells[1].p, 1);
  EXPECT_EQ(cells[1].modularity, 0.5);
}

TEST(WriteSweepOutputsTest, WritesCsvAndPlots) {
  Fixture f = DefaultPair(5);
  SweepSpec spec;
  spec.p_values = {0, 1};
  spec.q_values = {0, 1};
  std::vector<SweepRow> rows = *RunSweep(f.pair.t1, f.partition_t, spec);
  const std::string dir = testing::MakeTempDir("sweep_outputs");
  absl::StatusOr<std::vector<std::string>> written = WriteSweepOutputs(dir, rows);
  ASSERT_TRUE(written.ok()) << written.status();
  std::vector<std::string> names;
  for (const std::string& path : *written) {
    names.push_back(std::filesystem::path(path).filename().string());
  }
  EXPECT_THAT(names, ElementsAre("sweep.csv", "summary.csv", "mutual_information.svg",
                                 "matching_communities.svg", "modularity.svg"));
  EXPECT_THAT(testing::ReadFile(dir + "/sweep.csv"),
              StartsWith(std::string(kReportCsvHeader) + "\n0,0,0,"));
  EXPECT_THAT(testing::ReadFile(dir + "/summary.csv"),
              StartsWith("p,q,mean_mi,mean_matching_count,mean_modularity\n"));
  const std::string svg = testing::ReadFile(dir + "/modularity.svg");
  EXPECT_THAT(svg, StartsWith("<svg"));
  EXPECT_THAT(svg, HasSubstr("</svg>"));
  EXPECT_FALSE(WriteSweepOutputs(dir + "/missing", rows).ok());
}

TEST(ResolveThreadCountTest, EnvironmentCaps) {
  unsetenv("COMMUNITY_TRACK_THREADS");
  EXPECT_EQ(ResolveThreadCount(3), 3);
  EXPECT_GE(ResolveThreadCount(0), 1);
  setenv("COMMUNITY_TRACK_THREADS", "2", 1);
  EXPECT_EQ(ResolveThreadCount(8), 2);
  EXPECT_EQ(ResolveThreadCount(1), 1);
  unsetenv("COMMUNITY_TRACK_THREADS");
}

}  // namespace
}  // namespace community_track
