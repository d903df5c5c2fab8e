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

#include "cli.h"

#include <stdlib.h>

#include <algorithm>
#include <cctype>
#include <filesystem>
#include <fstream>
#include <memory>
#include <sstream>
#include <system_error>
#include <utility>

#include "CLI11.hpp"
#include "absl/status/status.h"
#include "absl/status/statusor.h"
#include "absl/strings/match.h"
#include "absl/strings/str_cat.h"
#include "absl/strings/str_format.h"
#include "community_track/dynamic.h"
#include "community_track/graph.h"
#include "community_track/ingest.h"
#include "community_track/io.h"
#include "community_track/louvain.h"
#include "community_track/metrics.h"
#include "community_track/partition.h"
#include "community_track/sweep.h"
#include "community_track/synth.h"
#include "run_record.h"

namespace community_track::cli {
namespace {

namespace fs = std::filesystem;

std::string CodeName(absl::StatusCode code) {
  std::string name = absl::StatusCodeToString(code);
  std::transform(name.begin(), name.end(), name.begin(),
                 [](unsigned char c) { return std::tolower(c); });
  return name;
}

void PrintError(std::ostream& err, const absl::Status& status) {
  err << "error: " << CodeName(status.code()) << ": " << status.message()
      << "\n";
}

std::string Real(double value) { return absl::StrFormat("%.12g", value); }

// State shared by every command: the provenance record under construction
// and where to store it once the command succeeds.
struct Invocation {
  RunRecord record;
  std::string sidecar_path;
};

// CLI11 validators.
const CLI::Range kProbability(0.0, 1.0);

CLI::Validator VisitOrderValidator() {
  return CLI::Validator(
      [](std::string& text) -> std::string {
        return ParseVisitOrder(text).ok()
                   ? std::string()
                   : "expected 'ascending' or 'seeded:<seed>', got '" + text + "'";
      },
      "ORDER");
}

CLI::Validator MatchThresholdValidator() {
  return CLI::Validator(
      [](std::string& text) -> std::string {
        double r = 0;
        if (!CLI::detail::lexical_cast(text, r) || !(r > 0.5 && r <= 1.0)) {
          return "match threshold must lie in (0.5, 1], got '" + text + "'";
        }
        return std::string();
      },
      "(0.5,1]");
}

// Partition of `graph` read back from a partition file keyed by external id.
absl::StatusOr<Partition> AttachPartition(const Snapshot& graph,
                                          const ExternalPartition& external,
                                          const std::string& source) {
  std::vector<CommunityId> assignment(graph.node_count());
  for (NodeId u = 0; u < graph.node_count(); ++u) {
    auto it = external.communities.find(graph.external_id(u));
    if (it == external.communities.end()) {
      return absl::InvalidArgumentError(
          absl::StrCat(source, ": node '", graph.external_id(u),
                       "' of the graph has no community"));
    }
    assignment[u] = it->second;
  }
  return Partition(std::move(assignment), external.max_old_community);
}

// ---------------------------------------------------------------- ingest

struct IngestOptions {
  std::vector<std::string> cdr;
  std::string month;
  int window = 3;
  uint64_t max_degree = kDefaultMaxDegree;
  std::string out;
};

absl::Status RunIngest(const IngestOptions& o, Invocation& inv,
                       std::ostream& out, std::ostream& err) {
  absl::StatusOr<YearMonth> anchor = YearMonth::Parse(o.month);
  if (!anchor.ok()) return anchor.status();
  std::vector<CdrRecord> records;
  uint64_t malformed = 0;
  for (const std::string& path : o.cdr) {
    absl::StatusOr<CdrParseResult> part = ParseCdrFile(path);
    if (!part.ok()) return part.status();
    if (part->malformed_lines > 0) {
      err << "warning: " << path << ": skipped " << part->malformed_lines
          << " malformed lines\n";
    }
    malformed += part->malformed_lines;
    std::move(part->records.begin(), part->records.end(),
              std::back_inserter(records));
    if (absl::Status s = AddInput(inv.record, path); !s.ok()) return s;
  }
  absl::StatusOr<Snapshot> month =
      BuildMonth(records, WindowSpec{*anchor, o.window}, o.max_degree);
  if (!month.ok()) return month.status();
  if (absl::Status s = WriteEdgeListFile(*month, o.out); !s.ok()) return s;
  if (absl::Status s = AddOutput(inv.record, "--out", o.out); !s.ok()) return s;

  inv.record.parameters = {{"month", anchor->ToString()},
                           {"window", o.window},
                           {"max_degree", o.max_degree}};
  inv.sidecar_path = o.out + ".run.json";
  out << "records=" << records.size() << " malformed=" << malformed
      << " nodes=" << month->node_count() << " edges=" << month->edge_count()
      << "\n";
  return absl::OkStatus();
}

// ---------------------------------------------------------------- detect

struct DetectOptions {
  std::string graph;
  std::string out;
  std::string order = "ascending";
  bool unweighted = false;
};

absl::Status RunDetect(const DetectOptions& o, Invocation& inv,
                       std::ostream& out, std::ostream&) {
  absl::StatusOr<Snapshot> graph = ReadEdgeListFile(o.graph);
  if (!graph.ok()) return graph.status();
  if (absl::Status s = AddInput(inv.record, o.graph); !s.ok()) return s;
  if (o.unweighted) *graph = graph->Unweighted();

  LouvainOptions options;
  options.order = *ParseVisitOrder(o.order);
  absl::StatusOr<LouvainResult> result =
      RunLouvain(*graph, Partition::Singletons(graph->node_count()), nullptr,
                 options);
  if (!result.ok()) return result.status();
  const Partition partition = result->partition.Compacted();
  if (absl::Status s = WritePartitionFile(*graph, partition, o.out); !s.ok()) {
    return s;
  }
  if (absl::Status s = AddOutput(inv.record, "--out", o.out); !s.ok()) return s;

  inv.record.parameters = {{"order", FormatVisitOrder(options.order)},
                           {"unweighted", o.unweighted}};
  inv.sidecar_path = o.out + ".run.json";
  out << "nodes=" << graph->node_count() << " edges=" << graph->edge_count()
      << " communities=" << partition.CommunityCount()
      << " levels=" << result->level_modularity.size()
      << " modularity=" << Real(result->modularity) << "\n";
  return absl::OkStatus();
}

// ---------------------------------------------------------------- evolve

struct EvolveOptions {
  std::string graph_t1;
  std::string partition_t;
  double p = 0;
  double q = 0;
  double free_rate = 0;
  uint64_t seed = 0;
  std::string order = "ascending";
  bool exact_count_sampling = false;
  bool q_first_level_only = false;
  std::string out;
};

DynamicParams ToParams(const EvolveOptions& o) {
  DynamicParams params;
  params.p = o.p;
  params.q = o.q;
  params.free_rate = o.free_rate;
  params.seed = o.seed;
  params.exact_count_sampling = o.exact_count_sampling;
  params.q_first_level_only = o.q_first_level_only;
  params.order = *ParseVisitOrder(o.order);
  return params;
}

nlohmann::ordered_json ParamsJson(const DynamicParams& params) {
  return {{"p", params.p},
          {"q", params.q},
          {"free_rate", params.free_rate},
          {"seed", params.seed},
          {"order", FormatVisitOrder(params.order)},
          {"exact_count_sampling", params.exact_count_sampling},
          {"q_first_level_only", params.q_first_level_only}};
}

absl::Status RunEvolve(const EvolveOptions& o, Invocation& inv,
                       std::ostream& out, std::ostream&) {
  absl::StatusOr<Snapshot> graph = ReadEdgeListFile(o.graph_t1);
  if (!graph.ok()) return graph.status();
  absl::StatusOr<ExternalPartition> previous = ReadPartitionFile(o.partition_t);
  if (!previous.ok()) return previous.status();
  if (absl::Status s = AddInput(inv.record, o.graph_t1); !s.ok()) return s;
  if (absl::Status s = AddInput(inv.record, o.partition_t); !s.ok()) return s;

  const DynamicParams params = ToParams(o);
  absl::StatusOr<EvolveResult> result = Evolve(*graph, *previous, params);
  if (!result.ok()) return result.status();
  if (absl::Status s = WritePartitionFile(*graph, result->partition, o.out);
      !s.ok()) {
    return s;
  }
  if (absl::Status s = AddOutput(inv.record, "--out", o.out); !s.ok()) return s;

  inv.record.parameters = ParamsJson(params);
  inv.sidecar_path = o.out + ".run.json";
  out << "nodes=" << graph->node_count()
      << " communities=" << result->partition.CommunityCount()
      << " fixed=" << result->flags.FixedCount()
      << " preferential=" << result->flags.PreferentialCount()
      << " modularity=" << Real(result->modularity) << "\n";
  return absl::OkStatus();
}

// ---------------------------------------------------------------- compare

struct CompareOptions {
  std::string partition_t;
  std::string partition_t1;
  std::string graph_t1;
  double match_threshold = kDefaultMatchThreshold;
  double p = 0;
  double q = 0;
  uint64_t seed = 0;
  std::string out;
};

absl::Status RunCompare(const CompareOptions& o, Invocation& inv,
                        std::ostream& out, std::ostream&) {
  absl::StatusOr<ExternalPartition> previous = ReadPartitionFile(o.partition_t);
  if (!previous.ok()) return previous.status();
  absl::StatusOr<ExternalPartition> current = ReadPartitionFile(o.partition_t1);
  if (!current.ok()) return current.status();
  absl::StatusOr<Snapshot> graph = ReadEdgeListFile(o.graph_t1);
  if (!graph.ok()) return graph.status();
  for (const std::string* path : {&o.partition_t, &o.partition_t1, &o.graph_t1}) {
    if (absl::Status s = AddInput(inv.record, *path); !s.ok()) return s;
  }

  absl::StatusOr<Partition> partition_t1 =
      AttachPartition(*graph, *current, o.partition_t1);
  if (!partition_t1.ok()) return partition_t1.status();
  absl::StatusOr<EvolutionReport> report =
      BuildReport(*graph, *previous, *partition_t1, o.match_threshold);
  if (!report.ok()) return report.status();

  const std::string csv = absl::StrCat(
      kReportCsvHeader, "\n", FormatReportRow({o.p, o.q, o.seed}, *report), "\n");
  out << csv;
  if (!o.out.empty()) {
    std::ofstream file(o.out, std::ios::binary);
    file << csv;
    file.close();
    if (!file) {
      return absl::NotFoundError(absl::StrCat("cannot write '", o.out, "'"));
    }
    if (absl::Status s = AddOutput(inv.record, "--out", o.out); !s.ok()) {
      return s;
    }
    inv.sidecar_path = o.out + ".run.json";
  }
  inv.record.parameters = {{"match_threshold", o.match_threshold},
                           {"p", o.p},
                           {"q", o.q},
                           {"seed", o.seed}};
  return absl::OkStatus();
}

// ---------------------------------------------------------------- synth

struct SynthOptions {
  PlantedConfig config;
  std::string out_t;
  std::string out_t1;
  std::string truth;
};

absl::Status RunSynth(const SynthOptions& o, Invocation& inv,
                      std::ostream& out, std::ostream&) {
  absl::StatusOr<PlantedPair> pair = GeneratePlantedPair(o.config);
  if (!pair.ok()) return pair.status();
  if (absl::Status s = WriteEdgeListFile(pair->t, o.out_t); !s.ok()) return s;
  if (absl::Status s = WriteEdgeListFile(pair->t1, o.out_t1); !s.ok()) return s;
  {
    std::ofstream file(o.truth, std::ios::binary);
    WriteTruth(*pair, file);
    file.close();
    if (!file) {
      return absl::NotFoundError(absl::StrCat("cannot write '", o.truth, "'"));
    }
  }
  for (const auto& [flag, path] : {std::pair{"--out-t", &o.out_t},
                                   std::pair{"--out-t1", &o.out_t1},
                                   std::pair{"--truth", &o.truth}}) {
    if (absl::Status s = AddOutput(inv.record, flag, *path); !s.ok()) return s;
  }

  const PlantedConfig& c = o.config;
  inv.record.parameters = {{"communities", c.communities},
                           {"size", c.size},
                           {"size_jitter", c.size_jitter},
                           {"p_in", c.p_in},
                           {"p_out", c.p_out},
                           {"churn", c.churn},
                           {"migration", c.migration},
                           {"seed", c.seed}};
  inv.sidecar_path = o.out_t + ".run.json";
  out << "t: nodes=" << pair->t.node_count() << " edges=" << pair->t.edge_count()
      << "\nt1: nodes=" << pair->t1.node_count()
      << " edges=" << pair->t1.edge_count() << "\n";
  return absl::OkStatus();
}

// ---------------------------------------------------------------- sweep

struct SweepOptions {
  std::string graph_t1;
  std::string partition_t;
  std::vector<double> p_values = DefaultGrid();
  std::vector<double> q_values = DefaultGrid();
  int seeds = 5;
  uint64_t seed_base = 1;
  double match_threshold = kDefaultMatchThreshold;
  double free_rate = 0;
  std::string order = "ascending";
  bool exact_count_sampling = false;
  bool q_first_level_only = false;
  int threads = 0;
  std::string out_dir;
};

absl::Status RunSweepCommand(const SweepOptions& o, Invocation& inv,
                             std::ostream& out, std::ostream&) {
  absl::StatusOr<Snapshot> graph = ReadEdgeListFile(o.graph_t1);
  if (!graph.ok()) return graph.status();
  absl::StatusOr<ExternalPartition> previous = ReadPartitionFile(o.partition_t);
  if (!previous.ok()) return previous.status();
  if (absl::Status s = AddInput(inv.record, o.graph_t1); !s.ok()) return s;
  if (absl::Status s = AddInput(inv.record, o.partition_t); !s.ok()) return s;

  SweepSpec spec;
  spec.p_values = o.p_values;
  spec.q_values = o.q_values;
  spec.seeds = o.seeds;
  spec.seed_base = o.seed_base;
  spec.match_threshold = o.match_threshold;
  spec.base.free_rate = o.free_rate;
  spec.base.order = *ParseVisitOrder(o.order);
  spec.base.exact_count_sampling = o.exact_count_sampling;
  spec.base.q_first_level_only = o.q_first_level_only;
  spec.threads = o.threads;
  absl::StatusOr<std::vector<SweepRow>> rows = RunSweep(*graph, *previous, spec);
  if (!rows.ok()) return rows.status();

  std::error_code ec;
  fs::create_directories(o.out_dir, ec);
  if (ec) {
    return absl::NotFoundError(
        absl::StrCat("cannot create '", o.out_dir, "': ", ec.message()));
  }
  absl::StatusOr<std::vector<std::string>> written =
      WriteSweepOutputs(o.out_dir, *rows);
  if (!written.ok()) return written.status();
  for (const std::string& path : *written) {
    if (absl::Status s = AddOutput(inv.record, "--out-dir", path); !s.ok()) {
      return s;
    }
  }

  // The thread count does not affect the output and is left out.
  inv.record.parameters = {{"p_values", spec.p_values},
                           {"q_values", spec.q_values},
                           {"seeds", spec.seeds},
                           {"seed_base", spec.seed_base},
                           {"match_threshold", spec.match_threshold},
                           {"free_rate", spec.base.free_rate},
                           {"order", FormatVisitOrder(spec.base.order)},
                           {"exact_count_sampling", spec.base.exact_count_sampling},
                           {"q_first_level_only", spec.base.q_first_level_only}};
  inv.sidecar_path = (fs::path(o.out_dir) / "run.json").string();
  out << "rows=" << rows->size() << " out_dir=" << o.out_dir << "\n";
  return absl::OkStatus();
}

// ---------------------------------------------------------------- replay

// Restores the working directory on scope exit.
class ScopedWorkingDirectory {
 public:
  ScopedWorkingDirectory() : saved_(fs::current_path()) {}
  ~ScopedWorkingDirectory() {
    std::error_code ec;
    fs::current_path(saved_, ec);
  }

 private:
  fs::path saved_;
};

// Removes a directory tree on scope exit.
class ScopedTempDir {
 public:
  static absl::StatusOr<std::unique_ptr<ScopedTempDir>> Create() {
    std::string pattern =
        (fs::temp_directory_path() / "community_track_replay_XXXXXX").string();
    if (mkdtemp(pattern.data()) == nullptr) {
      return absl::InternalError("cannot create a temporary directory");
    }
    return std::unique_ptr<ScopedTempDir>(new ScopedTempDir(pattern));
  }
  ~ScopedTempDir() {
    std::error_code ec;
    fs::remove_all(path_, ec);
  }
  const fs::path& path() const { return path_; }

 private:
  explicit ScopedTempDir(fs::path path) : path_(std::move(path)) {}
  fs::path path_;
};

// Points the value of `flag` at `value`, in either "--flag v" or
// "--flag=v" form.
void Redirect(std::vector<std::string>& args, const std::string& flag,
              const std::string& value) {
  for (size_t i = 0; i < args.size(); ++i) {
    if (args[i] == flag && i + 1 < args.size()) {
      args[i + 1] = value;
    } else if (absl::StartsWith(args[i], flag + "=")) {
      args[i] = flag + "=" + value;
    }
  }
}

absl::Status RunReplay(const std::string& sidecar, std::ostream& out,
                       std::ostream& err) {
  absl::StatusOr<RunRecord> record = ReadRunRecord(sidecar);
  if (!record.ok()) return record.status();
  if (record->command == "replay") {
    return absl::InvalidArgumentError("cannot replay a replay");
  }

  ScopedWorkingDirectory restore;
  std::error_code ec;
  fs::current_path(record->working_directory, ec);
  if (ec) {
    return absl::NotFoundError(absl::StrCat(
        "cannot enter '", record->working_directory, "': ", ec.message()));
  }
  for (const FileDigest& input : record->inputs) {
    absl::StatusOr<std::string> digest = Sha256File(input.path);
    if (!digest.ok()) return digest.status();
    if (*digest != input.sha256) {
      return absl::FailedPreconditionError(
          absl::StrCat("input '", input.path, "' changed since the recorded run"));
    }
  }

  absl::StatusOr<std::unique_ptr<ScopedTempDir>> temp = ScopedTempDir::Create();
  if (!temp.ok()) return temp.status();
  const fs::path& dir = (*temp)->path();

  // Re-run with every output redirected into the temporary directory.
  std::vector<std::string> args = record->args;
  std::vector<fs::path> fresh;
  for (const FileDigest& output : record->outputs) {
    if (output.flag == "--out-dir") {
      Redirect(args, output.flag, (dir / "out-dir").string());
      fresh.push_back(dir / "out-dir" / fs::path(output.path).filename());
    } else {
      const fs::path target = dir / (output.flag.substr(2) + ".out");
      Redirect(args, output.flag, target.string());
      fresh.push_back(target);
    }
  }
  std::ostringstream ignored;
  std::ostringstream errors;
  if (Run(args, ignored, errors) != kExitOk) {
    err << errors.str();
    return absl::InternalError(
        absl::StrCat("re-running '", record->command, "' failed"));
  }

  for (size_t i = 0; i < record->outputs.size(); ++i) {
    absl::StatusOr<std::string> digest = Sha256File(fresh[i].string());
    if (!digest.ok()) return digest.status();
    if (*digest != record->outputs[i].sha256) {
      return absl::DataLossError(absl::StrCat(
          "output '", record->outputs[i].path, "' differs on replay"));
    }
  }
  out << "replay " << record->command << ": " << record->outputs.size()
      << " outputs reproduced byte-identically\n";
  return absl::OkStatus();
}

}  // namespace

int Run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app("Community detection and tracking on monthly call graphs.",
               "community_track");
  app.require_subcommand(1);
  app.set_version_flag("--version", kToolVersion);

  IngestOptions ingest;
  CLI::App* ingest_cmd = app.add_subcommand(
      "ingest", "Build one month's call graph from CDR files.");
  ingest_cmd->add_option("--cdr", ingest.cdr, "CDR CSV files")->required()->expected(1, -1);
  ingest_cmd->add_option("--month", ingest.month, "Anchor month, YYYY-MM")->required();
  ingest_cmd->add_option("--window", ingest.window, "Months aggregated, ending at --month")
      ->capture_default_str()->check(CLI::PositiveNumber);
  ingest_cmd->add_option("--max-degree", ingest.max_degree,
                         "Drop nodes with more distinct neighbors")
      ->capture_default_str();
  ingest_cmd->add_option("--out", ingest.out, "Edge list to write")->required();

  DetectOptions detect;
  CLI::App* detect_cmd = app.add_subcommand("detect", "Static Louvain on one graph.");
  detect_cmd->add_option("--graph", detect.graph, "Edge list")->required();
  detect_cmd->add_option("--out", detect.out, "Partition to write")->required();
  detect_cmd->add_option("--order", detect.order, "ascending or seeded:<seed>")
      ->capture_default_str()->check(VisitOrderValidator());
  detect_cmd->add_flag("--unweighted", detect.unweighted, "Treat every edge as weight 1");

  EvolveOptions evolve;
  CLI::App* evolve_cmd = app.add_subcommand(
      "evolve", "Partition the T+1 graph, staying close to the partition at T.");
  evolve_cmd->add_option("--graph-t1", evolve.graph_t1, "Edge list at T+1")->required();
  evolve_cmd->add_option("--partition-t", evolve.partition_t, "Partition at T")->required();
  evolve_cmd->add_option("--p", evolve.p, "Fixed-node probability")
      ->required()->check(kProbability);
  evolve_cmd->add_option("--q", evolve.q, "Preferential-attachment probability")
      ->required()->check(kProbability);
  evolve_cmd->add_option("--free-rate", evolve.free_rate,
                         "Probability that a returning node starts alone")
      ->capture_default_str()->check(kProbability);
  evolve_cmd->add_option("--seed", evolve.seed, "RNG seed")->required();
  evolve_cmd->add_option("--order", evolve.order, "ascending or seeded:<seed>")
      ->capture_default_str()->check(VisitOrderValidator());
  evolve_cmd->add_flag("--exact-count-sampling", evolve.exact_count_sampling,
                       "Draw exactly round(p|R|) fixed and round(q|N|) preferential nodes");
  evolve_cmd->add_flag("--q-first-level-only", evolve.q_first_level_only,
                       "Apply preferential attachment on the first level only");
  evolve_cmd->add_option("--out", evolve.out, "Partition to write")->required();

  CompareOptions compare;
  CLI::App* compare_cmd = app.add_subcommand(
      "compare", "Stability and quality report for two consecutive partitions.");
  compare_cmd->add_option("--partition-t", compare.partition_t, "Partition at T")->required();
  compare_cmd->add_option("--partition-t1", compare.partition_t1, "Partition at T+1")
      ->required();
  compare_cmd->add_option("--graph-t1", compare.graph_t1, "Edge list at T+1")->required();
  compare_cmd->add_option("--match-threshold", compare.match_threshold,
                          "Overlap fraction r for matching communities")
      ->capture_default_str()->check(MatchThresholdValidator());
  compare_cmd->add_option("--p", compare.p, "Label for the p column")->check(kProbability);
  compare_cmd->add_option("--q", compare.q, "Label for the q column")->check(kProbability);
  compare_cmd->add_option("--seed", compare.seed, "Label for the seed column");
  compare_cmd->add_option("--out", compare.out, "Also write the report CSV here");

  SynthOptions synth;
  CLI::App* synth_cmd = app.add_subcommand(
      "synth", "Generate a planted-partition graph pair with ground truth.");
  synth_cmd->add_option("--communities", synth.config.communities)->capture_default_str()
      ->check(CLI::PositiveNumber);
  synth_cmd->add_option("--size", synth.config.size, "Mean community size")
      ->capture_default_str()->check(CLI::PositiveNumber);
  synth_cmd->add_option("--size-jitter", synth.config.size_jitter)->capture_default_str()
      ->check(CLI::NonNegativeNumber);
  synth_cmd->add_option("--p-in", synth.config.p_in)->capture_default_str()->check(kProbability);
  synth_cmd->add_option("--p-out", synth.config.p_out)->capture_default_str()
      ->check(kProbability);
  synth_cmd->add_option("--churn", synth.config.churn)->capture_default_str()
      ->check(kProbability);
  synth_cmd->add_option("--migration", synth.config.migration)->capture_default_str()
      ->check(kProbability);
  synth_cmd->add_option("--seed", synth.config.seed)->capture_default_str();
  synth_cmd->add_option("--out-t", synth.out_t, "Edge list at T")->required();
  synth_cmd->add_option("--out-t1", synth.out_t1, "Edge list at T+1")->required();
  synth_cmd->add_option("--truth", synth.truth, "Planted labels at both times")->required();

  SweepOptions sweep;
  CLI::App* sweep_cmd = app.add_subcommand(
      "sweep", "Evolve and compare over a (p, q) grid with several seeds.");
  sweep_cmd->add_option("--graph-t1", sweep.graph_t1, "Edge list at T+1")->required();
  sweep_cmd->add_option("--partition-t", sweep.partition_t, "Partition at T")->required();
  sweep_cmd->add_option("--p-values", sweep.p_values, "Comma-separated p grid")
      ->delimiter(',')->check(kProbability);
  sweep_cmd->add_option("--q-values", sweep.q_values, "Comma-separated q grid")
      ->delimiter(',')->check(kProbability);
  sweep_cmd->add_option("--seeds", sweep.seeds, "Seeds per cell")->capture_default_str()
      ->check(CLI::PositiveNumber);
  sweep_cmd->add_option("--seed-base", sweep.seed_base, "First seed")->capture_default_str();
  sweep_cmd->add_option("--match-threshold", sweep.match_threshold)->capture_default_str()
      ->check(MatchThresholdValidator());
  sweep_cmd->add_option("--free-rate", sweep.free_rate)->capture_default_str()
      ->check(kProbability);
  sweep_cmd->add_option("--order", sweep.order)->capture_default_str()
      ->check(VisitOrderValidator());
  sweep_cmd->add_flag("--exact-count-sampling", sweep.exact_count_sampling);
  sweep_cmd->add_flag("--q-first-level-only", sweep.q_first_level_only);
  sweep_cmd->add_option("--threads", sweep.threads,
                        "Worker threads, 0 for all cores (capped by COMMUNITY_TRACK_THREADS)")
      ->capture_default_str()->check(CLI::NonNegativeNumber);
  sweep_cmd->add_option("--out-dir", sweep.out_dir, "Directory for CSV and SVG outputs")
      ->required();

  std::string replay_path;
  CLI::App* replay_cmd = app.add_subcommand(
      "replay", "Re-run a command from its run.json and verify its outputs.");
  replay_cmd->add_option("run_json", replay_path, "Sidecar to replay")->required();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << (app.get_subcommands().empty() ? app.help()
                                          : app.get_subcommands()[0]->help());
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::CallForVersion&) {
    out << kToolVersion << "\n";
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: invalid_argument: " << e.what() << "\n";
    err << (app.get_subcommands().empty() ? app.help()
                                          : app.get_subcommands()[0]->help());
    return kExitUsage;
  }

  CLI::App* chosen = app.get_subcommands()[0];
  Invocation inv;
  inv.record.tool_version = kToolVersion;
  inv.record.command = chosen->get_name();
  inv.record.args = args;
  std::error_code ec;
  inv.record.working_directory = fs::current_path(ec).string();

  absl::Status status;
  if (chosen == ingest_cmd) {
    status = RunIngest(ingest, inv, out, err);
  } else if (chosen == detect_cmd) {
    status = RunDetect(detect, inv, out, err);
  } else if (chosen == evolve_cmd) {
    status = RunEvolve(evolve, inv, out, err);
  } else if (chosen == compare_cmd) {
    status = RunCompare(compare, inv, out, err);
  } else if (chosen == synth_cmd) {
    status = RunSynth(synth, inv, out, err);
  } else if (chosen == sweep_cmd) {
    status = RunSweepCommand(sweep, inv, out, err);
  } else {
    status = RunReplay(replay_path, out, err);
  }
  if (status.ok() && !inv.sidecar_path.empty()) {
    status = WriteRunRecord(inv.record, inv.sidecar_path);
  }
  if (!status.ok()) {
    PrintError(err, status);
    return kExitFailure;
  }
  return kExitOk;
}

}  // namespace community_track::cli
