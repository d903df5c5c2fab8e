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

// Acceptance suite. Prints one PASS or FAIL line per criterion and exits
// nonzero if any criterion fails. The scale check spawns the command-line
// binary named by COMMUNITY_TRACK_BINARY.

#include <fcntl.h>
#include <sys/resource.h>
#include <sys/wait.h>
#include <unistd.h>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "absl/strings/str_format.h"
#include "cli.h"
#include "community_track/dynamic.h"
#include "community_track/ingest.h"
#include "community_track/io.h"
#include "community_track/louvain.h"
#include "community_track/metrics.h"
#include "community_track/synth.h"
#include "test_support.h"

namespace community_track {
namespace {

using Clock = std::chrono::steady_clock;

struct Verdict {
  bool pass = false;
  std::string detail;
};

double Seconds(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

std::string Bytes(const Snapshot& s, const Partition& p) {
  std::ostringstream out;
  WritePartition(s, p, out);
  return out.str();
}

ExternalPartition StaticPartition(const Snapshot& s) {
  Partition gamma =
      RunLouvain(s, Partition::Singletons(s.node_count()))->partition.Compacted();
  ExternalPartition external = ToExternal(s, gamma);
  external.max_old_community = external.MaxCommunityId();
  return external;
}

// 1. Modularity against a dense double sum and Louvain against exhaustive
// enumeration of set partitions.
Verdict ModularityOracle() {
  const auto start = Clock::now();
  std::mt19937_64 rng(101);
  double worst_formula = 0;
  double worst_excess = -1;
  uint64_t max_partitions = 0;
  int graphs = 0;
  while (graphs < 100) {
    const int n = 2 + graphs % 7;
    std::vector<testing::IntEdge> edges = testing::RandomEdges(rng, n, 0.5, 3);
    if (edges.empty()) continue;
    Snapshot s = testing::MakeSnapshot(n, edges);
    std::vector<int64_t> labels = testing::RandomLabels(rng, n, 3);
    worst_formula = std::max(
        worst_formula, std::abs(*Modularity(s, Partition(labels)) -
                                testing::BruteForceModularity(n, edges, labels)));
    const LouvainResult result = *RunLouvain(s, Partition::Singletons(n));
    uint64_t seen = 0;
    const double optimum = testing::OptimalModularity(n, edges, &seen);
    max_partitions = std::max(max_partitions, seen);
    worst_excess = std::max(worst_excess, result.modularity - optimum);
    ++graphs;
  }
  const double elapsed = Seconds(start);
  return {worst_formula <= 1e-12 && worst_excess <= 1e-12 && elapsed < 30,
          absl::StrFormat("100 graphs, max |Q - oracle| %.3g, max Q - optimum %.3g, "
                          "up to %d partitions enumerated, %.2f s",
                          worst_formula, worst_excess, max_partitions, elapsed)};
}

// 2. Two triangles joined by a bridge.
Verdict Barbell() {
  Snapshot s = testing::MakeSnapshot(6, testing::BarbellEdges());
  const LouvainResult r = *RunLouvain(s, Partition::Singletons(6));
  auto c = r.partition.assignment();
  const bool triangles = c[0] == c[1] && c[1] == c[2] && c[3] == c[4] &&
                         c[4] == c[5] && c[0] != c[3];
  return {triangles && std::abs(r.modularity - 5.0 / 14.0) <= 1e-9,
          absl::StrFormat("Q = %.15f, expected %.15f, two triangles: %s", r.modularity,
                          5.0 / 14.0, triangles ? "yes" : "no")};
}

// 3. Incremental gain against recomputing Q before and after the move.
Verdict DeltaQConsistency() {
  std::mt19937_64 rng(103);
  double worst = 0;
  int cases = 0;
  while (cases < 1000) {
    const int n = 3 + cases % 8;
    std::vector<testing::IntEdge> edges = testing::RandomEdges(rng, n, 0.45, 4);
    if (edges.empty()) continue;
    Snapshot s = testing::MakeSnapshot(n, edges);
    std::vector<int64_t> labels = testing::RandomLabels(rng, n, 4);
    const int node = static_cast<int>(rng() % n);
    const int64_t target = labels[rng() % n];
    std::vector<int64_t> alone = labels;
    alone[node] = 1000;
    std::vector<int64_t> joined = labels;
    joined[node] = target;
    LouvainState state(s.view(), labels);
    state.Detach(node);
    const double delta = state.DeltaQ(node, state.FindCommunity(target));
    const double expected = testing::BruteForceModularity(n, edges, joined) -
                            testing::BruteForceModularity(n, edges, alone);
    worst = std::max(worst, std::abs(delta - expected));
    ++cases;
  }
  return {worst <= 1e-10, absl::StrFormat("1000 moves, max error %.3g", worst)};
}

// 4. Fixed nodes keep their community.
Verdict FixedPoint() {
  uint64_t violations = 0;
  uint64_t checked = 0;
  for (uint64_t seed = 1; seed <= 20; ++seed) {
    PlantedConfig config;
    config.seed = seed;
    config.churn = 0.2;
    config.migration = 0.2;
    PlantedPair pair = *GeneratePlantedPair(config);
    ExternalPartition gamma = StaticPartition(pair.t);
    DynamicParams params;
    params.p = 1.0;
    params.q = 0.5;
    params.seed = seed;
    EvolveResult r = *Evolve(pair.t1, gamma, params);
    for (NodeId u = 0; u < pair.t1.node_count(); ++u) {
      auto it = gamma.communities.find(pair.t1.external_id(u));
      if (it == gamma.communities.end()) continue;
      ++checked;
      if (r.partition.community(u) != it->second) ++violations;
    }
  }
  return {violations == 0 && checked > 0,
          absl::StrFormat("%d remaining nodes over 20 seeds, %d violations", checked,
                          violations)};
}

// 5. p = q = 0 against the warm-started Louvain run.
Verdict BaselineEquivalence() {
  int identical = 0;
  int runs = 0;
  for (uint64_t seed = 1; seed <= 20; ++seed) {
    PlantedConfig config;
    config.seed = seed;
    PlantedPair pair = *GeneratePlantedPair(config);
    ExternalPartition gamma = StaticPartition(pair.t);
    DynamicParams params;
    params.seed = seed;
    params.free_rate = seed % 2 == 0 ? 0.0 : 0.25;
    params.order = *ParseVisitOrder(seed % 3 == 0 ? "ascending" : "seeded:9");
    EvolveResult evolved = *Evolve(pair.t1, gamma, params);
    LouvainOptions options;
    options.order = params.order;
    LouvainResult lmag =
        *RunLouvain(pair.t1, LmagInit(pair.t1, gamma, params.free_rate, seed), nullptr,
                    options);
    identical += Bytes(pair.t1, evolved.partition) == Bytes(pair.t1, lmag.partition);
    ++runs;
  }
  return {identical == runs,
          absl::StrFormat("%d of %d partition files byte-identical", identical, runs)};
}

// Means over seeds of the report at p = 0 and p = 1 (q = 0) on the default
// synthetic pair; shared by criteria 6 to 8.
struct TrendMeans {
  double mi[2] = {0, 0};
  double matching[2] = {0, 0};
  double modularity[2] = {0, 0};
  double seconds = 0;
};

const TrendMeans& Trends() {
  static const TrendMeans means = [] {
    TrendMeans m;
    const auto start = Clock::now();
    constexpr int kSeeds = 20;
    for (uint64_t seed = 1; seed <= kSeeds; ++seed) {
      PlantedConfig config;
      config.seed = seed;
      PlantedPair pair = *GeneratePlantedPair(config);
      ExternalPartition gamma = StaticPartition(pair.t);
      for (int fixed = 0; fixed < 2; ++fixed) {
        DynamicParams params;
        params.p = fixed;
        params.seed = seed;
        EvolveResult r = *Evolve(pair.t1, gamma, params);
        EvolutionReport report = *BuildReport(pair.t1, gamma, r.partition);
        m.mi[fixed] += report.mutual_information / kSeeds;
        m.matching[fixed] += static_cast<double>(report.matching_pairs.size()) / kSeeds;
        m.modularity[fixed] += report.modularity_t1 / kSeeds;
      }
    }
    m.seconds = Seconds(start);
    return m;
  }();
  return means;
}

// 6. Mutual information grows with p.
Verdict MutualInformationTrend() {
  const TrendMeans& m = Trends();
  return {m.mi[1] > m.mi[0] && m.seconds < 120,
          absl::StrFormat("mean MI p=1: %.6f, p=0: %.6f, %.2f s", m.mi[1], m.mi[0],
                          m.seconds)};
}

// 7. Matching communities grow with p.
Verdict MatchingTrend() {
  const TrendMeans& m = Trends();
  return {m.matching[1] >= m.matching[0],
          absl::StrFormat("mean matching communities p=1: %.3f, p=0: %.3f", m.matching[1],
                          m.matching[0])};
}

// 8. Modularity drops only a little.
Verdict ModularityTrend() {
  const TrendMeans& m = Trends();
  const double ratio = m.modularity[1] / m.modularity[0];
  return {ratio >= 0.8, absl::StrFormat("mean Q p=1: %.6f, p=0: %.6f, ratio %.6f",
                                        m.modularity[1], m.modularity[0], ratio)};
}

// 9. CDR fixture against the golden edge list.
Verdict IngestGolden() {
  std::vector<CdrRecord> records;
  for (const char* name : {"cdr_part1.csv", "cdr_part2.csv"}) {
    absl::StatusOr<CdrParseResult> part = ParseCdrFile(testing::TestDataPath(name));
    if (!part.ok()) return {false, std::string(part.status().message())};
    records.insert(records.end(), part->records.begin(), part->records.end());
  }
  absl::StatusOr<Snapshot> month =
      BuildMonth(records, WindowSpec{*YearMonth::Parse("2012-03"), 3}, 200);
  if (!month.ok()) return {false, std::string(month.status().message())};
  std::ostringstream out;
  WriteEdgeList(*month, out);
  const std::string golden = testing::ReadFile(testing::TestDataPath("golden_2012-03.tsv"));
  return {out.str() == golden,
          absl::StrFormat("%d edges, %d bytes, golden %d bytes", month->edge_count(),
                          out.str().size(), golden.size())};
}

// 10. MI symmetry and bounds, matching bijection and monotonicity.
Verdict MetricProperties() {
  std::mt19937_64 rng(110);
  constexpr int kPairs = 600;
  int symmetric = 0, bounded = 0, bijective = 0, monotone = 0;
  for (int trial = 0; trial < kPairs; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 50);
    std::vector<int64_t> a = testing::RandomLabels(rng, n, 1 + trial % 8);
    std::vector<int64_t> b = a;
    const int perturbed = static_cast<int>(rng() % (n + 1));
    for (int k = 0; k < perturbed; ++k) b[rng() % n] = static_cast<int64_t>(rng() % 8);
    const MutualInformation ab = *ComputeMutualInformation(a, b);
    const MutualInformation ba = *ComputeMutualInformation(b, a);
    symmetric += std::abs(ab.mi - ba.mi) <= 1e-12;
    bounded += ab.mi >= 0 && ab.mi <= std::min(ab.h_t, ab.h_t1) + 1e-12;

    const std::vector<CommunityPair> loose = *MatchCommunities(a, b, 0.51);
    const std::vector<CommunityPair> strict = *MatchCommunities(a, b, 0.9);
    std::set<CommunityId> olds, news;
    bool unique = true;
    for (const CommunityPair& p : loose) {
      unique &= olds.insert(p.old_community).second;
      unique &= news.insert(p.new_community).second;
    }
    bijective += unique;
    bool subset = true;
    for (const CommunityPair& p : strict) {
      subset &= std::find(loose.begin(), loose.end(), p) != loose.end();
    }
    monotone += subset;
  }
  return {symmetric == kPairs && bounded == kPairs && bijective == kPairs &&
              monotone == kPairs,
          absl::StrFormat("%d pairs: symmetry %d, bounds %d, bijection %d, monotone %d",
                          kPairs, symmetric, bounded, bijective, monotone)};
}

int Cli(std::vector<std::string> args, std::string* out = nullptr) {
  std::ostringstream o, e;
  const int code = cli::Run(args, o, e);
  if (out != nullptr) *out = o.str() + e.str();
  return code;
}

// 11. Every command re-run from its sidecar.
Verdict Determinism() {
  const std::string dir = testing::MakeTempDir("acceptance_replay");
  auto path = [&](const char* name) { return dir + "/" + name; };
  const std::vector<std::vector<std::string>> commands = {
      {"ingest", "--cdr", testing::TestDataPath("cdr_part1.csv"),
       testing::TestDataPath("cdr_part2.csv"), "--month", "2012-03", "--out",
       path("month.tsv")},
      {"synth", "--seed", "4", "--out-t", path("t.tsv"), "--out-t1", path("t1.tsv"),
       "--truth", path("truth.tsv")},
      {"detect", "--graph", path("t.tsv"), "--out", path("pt.tsv"), "--order", "seeded:2"},
      {"evolve", "--graph-t1", path("t1.tsv"), "--partition-t", path("pt.tsv"), "--p",
       "0.5", "--q", "0.5", "--free-rate", "0.1", "--seed", "8", "--out", path("pt1.tsv")},
      {"compare", "--partition-t", path("pt.tsv"), "--partition-t1", path("pt1.tsv"),
       "--graph-t1", path("t1.tsv"), "--out", path("report.csv")},
      {"sweep", "--graph-t1", path("t1.tsv"), "--partition-t", path("pt.tsv"),
       "--p-values", "0,0.5,1", "--q-values", "0,1", "--seeds", "2", "--out-dir",
       path("sweep")}};
  const std::vector<std::string> sidecars = {
      "month.tsv.run.json", "t.tsv.run.json",      "pt.tsv.run.json",
      "pt1.tsv.run.json",   "report.csv.run.json", "sweep/run.json"};
  int reproduced = 0;
  std::string failure;
  for (size_t i = 0; i < commands.size(); ++i) {
    std::string log;
    if (Cli(commands[i], &log) != cli::kExitOk) {
      failure = commands[i][0] + ": " + log;
      break;
    }
    if (Cli({"replay", dir + "/" + sidecars[i]}, &log) != cli::kExitOk) {
      failure = "replay " + commands[i][0] + ": " + log;
      break;
    }
    ++reproduced;
  }
  std::filesystem::remove_all(dir);
  const int total = static_cast<int>(commands.size());
  return {reproduced == total,
          absl::StrFormat("%d of %d commands reproduced byte-identically%s", reproduced,
                          total, failure.empty() ? "" : " (" + failure + ")")};
}

// 12. Static detection at a million nodes, run as a separate process.
Verdict ScaleSmoke() {
  const std::string dir = testing::MakeTempDir("acceptance_scale");
  const std::string graph_path = dir + "/scale.tsv";
  PlantedConfig config;
  config.communities = 1000;
  config.size = 1000;
  config.p_in = 0.02;
  config.p_out = 1e-7;
  config.seed = 12;
  {
    absl::StatusOr<Snapshot> graph = GeneratePlantedGraph(config);
    if (!graph.ok()) return {false, std::string(graph.status().message())};
    if (absl::Status s = WriteEdgeListFile(*graph, graph_path); !s.ok()) {
      return {false, std::string(s.message())};
    }
    std::printf("      scale graph: %d nodes, %llu edges\n", graph->node_count(),
                static_cast<unsigned long long>(graph->edge_count()));
    std::fflush(stdout);
  }

  const std::string binary = COMMUNITY_TRACK_BINARY;
  const std::string out_path = dir + "/scale_partition.tsv";
  const auto start = Clock::now();
  const pid_t child = fork();
  if (child == 0) {
    const int devnull = ::open("/dev/null", O_WRONLY);
    ::dup2(devnull, STDOUT_FILENO);
    ::execl(binary.c_str(), binary.c_str(), "detect", "--graph", graph_path.c_str(),
            "--out", out_path.c_str(), static_cast<char*>(nullptr));
    ::_exit(127);
  }
  int status = 0;
  struct rusage usage {};
  ::wait4(child, &status, 0, &usage);
  const double elapsed = Seconds(start);
  const double max_rss_gb = static_cast<double>(usage.ru_maxrss) / (1024.0 * 1024.0);
  const bool exited = WIFEXITED(status) && WEXITSTATUS(status) == 0;
  const bool wrote = std::filesystem::exists(out_path);
  std::filesystem::remove_all(dir);
  return {exited && wrote && elapsed < 600 && max_rss_gb < 8,
          absl::StrFormat("detect exit %s, %.1f s (limit 600), max RSS %.3f GB (limit 8)",
                          exited ? "0" : "nonzero", elapsed, max_rss_gb)};
}

}  // namespace
}  // namespace community_track

int main() {
  using community_track::Verdict;
  struct Criterion {
    const char* name;
    std::function<Verdict()> check;
  };
  const std::vector<Criterion> criteria = {
      {"modularity oracle", community_track::ModularityOracle},
      {"barbell fixture", community_track::Barbell},
      {"delta-Q consistency", community_track::DeltaQConsistency},
      {"fixed-point guarantee", community_track::FixedPoint},
      {"baseline equivalence", community_track::BaselineEquivalence},
      {"MI trend in p", community_track::MutualInformationTrend},
      {"matching trend in p", community_track::MatchingTrend},
      {"modularity ratio", community_track::ModularityTrend},
      {"ingestion golden file", community_track::IngestGolden},
      {"metric properties", community_track::MetricProperties},
      {"determinism via run.json", community_track::Determinism},
      {"scale smoke test", community_track::ScaleSmoke},
  };
  int passed = 0;
  for (size_t i = 0; i < criteria.size(); ++i) {
    const Verdict v = criteria[i].check();
    std::printf("%s %2zu %s: %s\n", v.pass ? "PASS" : "FAIL", i + 1, criteria[i].name,
                v.detail.c_str());
    std::fflush(stdout);
    passed += v.pass;
  }
  std::printf("acceptance: %d/%zu criteria passed\n", passed, criteria.size());
  return passed == static_cast<int>(criteria.size()) ? 0 : 1;
}
