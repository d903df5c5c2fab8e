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

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <fstream>
#include <mutex>
#include <optional>
#include <thread>

#include "absl/strings/numbers.h"
#include "absl/strings/str_cat.h"
#include "absl/strings/str_format.h"
#include "community_track/svg_plot.h"

namespace community_track {
namespace {

absl::Status WriteText(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) return absl::NotFoundError(absl::StrCat("cannot open '", path, "'"));
  out << text;
  out.close();
  if (!out) return absl::DataLossError(absl::StrCat("write failed: ", path));
  return absl::OkStatus();
}

}  // namespace

absl::Status SweepSpec::Validate() const {
  if (p_values.empty() || q_values.empty()) {
    return absl::InvalidArgumentError("p and q grids must be nonempty");
  }
  if (seeds < 1) return absl::InvalidArgumentError("need at least one seed");
  for (double v : p_values) {
    DynamicParams probe = base;
    probe.p = v;
    if (absl::Status s = probe.Validate(); !s.ok()) return s;
  }
  for (double v : q_values) {
    DynamicParams probe = base;
    probe.q = v;
    if (absl::Status s = probe.Validate(); !s.ok()) return s;
  }
  if (!(match_threshold > 0.5 && match_threshold <= 1.0)) {
    return absl::InvalidArgumentError("match threshold must lie in (0.5, 1]");
  }
  return base.Validate();
}

std::vector<double> DefaultGrid() {
  std::vector<double> grid;
  for (int percent = 0; percent <= 100; percent += 10) {
    grid.push_back(percent / 100.0);
  }
  return grid;
}

int ResolveThreadCount(int requested) {
  int threads = requested > 0
                    ? requested
                    : static_cast<int>(std::thread::hardware_concurrency());
  if (const char* cap = std::getenv("COMMUNITY_TRACK_THREADS")) {
    int limit = 0;
    if (absl::SimpleAtoi(cap, &limit) && limit > 0) {
      threads = std::min(threads, limit);
    }
  }
  return std::max(threads, 1);
}

absl::StatusOr<std::vector<SweepRow>> RunSweep(const Snapshot& graph_t1,
                                               const ExternalPartition& partition_t,
                                               const SweepSpec& spec) {
  if (absl::Status s = spec.Validate(); !s.ok()) return s;

  std::vector<ReportKey> cells;
  for (double p : spec.p_values) {
    for (double q : spec.q_values) {
      for (int k = 0; k < spec.seeds; ++k) {
        cells.push_back({p, q, spec.seed_base + static_cast<uint64_t>(k)});
      }
    }
  }
  std::sort(cells.begin(), cells.end(), [](const ReportKey& a, const ReportKey& b) {
    return std::tie(a.p, a.q, a.seed) < std::tie(b.p, b.q, b.seed);
  });

  std::vector<std::optional<EvolutionReport>> reports(cells.size());
  std::atomic<size_t> next{0};
  std::atomic<bool> failed{false};
  std::mutex error_mutex;
  size_t error_cell = cells.size();
  absl::Status error;

  auto work = [&] {
    for (;;) {
      const size_t i = next.fetch_add(1);
      if (i >= cells.size() || failed.load()) return;
      DynamicParams params = spec.base;
      params.p = cells[i].p;
      params.q = cells[i].q;
      params.seed = cells[i].seed;
      absl::StatusOr<EvolutionReport> report;
      absl::StatusOr<EvolveResult> evolved = Evolve(graph_t1, partition_t, params);
      if (evolved.ok()) {
        report = BuildReport(graph_t1, partition_t, evolved->partition,
                             spec.match_threshold);
      } else {
        report = evolved.status();
      }
      if (!report.ok()) {
        std::lock_guard<std::mutex> lock(error_mutex);
        if (i < error_cell) {
          error_cell = i;
          error = report.status();
        }
        failed.store(true);
        return;
      }
      reports[i] = *std::move(report);
    }
  };

  const int threads =
      std::min<int>(ResolveThreadCount(spec.threads), static_cast<int>(cells.size()));
  std::vector<std::thread> pool;
  for (int t = 1; t < threads; ++t) pool.emplace_back(work);
  work();
  for (std::thread& thread : pool) thread.join();

  if (failed.load()) {
    const ReportKey& cell = cells[error_cell];
    return absl::Status(error.code(),
                        absl::StrFormat("sweep cell p=%g q=%g seed=%d: %s", cell.p,
                                        cell.q, cell.seed, error.message()));
  }
  std::vector<SweepRow> rows;
  rows.reserve(cells.size());
  for (size_t i = 0; i < cells.size(); ++i) {
    rows.push_back({cells[i], *std::move(reports[i])});
  }
  return rows;
}

std::vector<SweepCell> Summarize(
    const std::vector<SweepRow>& rows) {
  std::vector<SweepCell> cells;
  for (size_t i = 0; i < rows.size();) {
    SweepCell cell{rows[i].key.p, rows[i].key.q};
    size_t count = 0;
    for (; i < rows.size() && rows[i].key.p == cell.p && rows[i].key.q == cell.q;
         ++i, ++count) {
      cell.mutual_information += rows[i].report.mutual_information;
      cell.matching_count += rows[i].report.matching_pairs.size();
      cell.modularity += rows[i].report.modularity_t1;
    }
    cell.mutual_information /= count;
    cell.matching_count /= count;
    cell.modularity /= count;
    cells.push_back(cell);
  }
  return cells;
}

absl::StatusOr<std::vector<std::string>> WriteSweepOutputs(
    const std::string& directory, const std::vector<SweepRow>& rows) {
  std::vector<std::string> written;
  auto emit = [&](const std::string& name, const std::string& text) {
    const std::string path = absl::StrCat(directory, "/", name);
    absl::Status status = WriteText(path, text);
    if (status.ok()) written.push_back(path);
    return status;
  };

  std::string csv = absl::StrCat(kReportCsvHeader, "\n");
  for (const SweepRow& row : rows) {
    absl::StrAppend(&csv, FormatReportRow(row.key, row.report), "\n");
  }
  if (absl::Status s = emit("sweep.csv", csv); !s.ok()) return s;

  const std::vector<SweepCell> cells = Summarize(rows);
  std::string summary = "p,q,mean_mi,mean_matching_count,mean_modularity\n";
  for (const SweepCell& cell : cells) {
    absl::StrAppendFormat(&summary, "%.12g,%.12g,%.12g,%.12g,%.12g\n", cell.p,
                          cell.q, cell.mutual_information, cell.matching_count,
                          cell.modularity);
  }
  if (absl::Status s = emit("summary.csv", summary); !s.ok()) return s;

  // Grids in the order rows were produced: p outer, q inner, both ascending.
  std::vector<double> ps, qs;
  for (const SweepCell& cell : cells) {
    if (std::find(ps.begin(), ps.end(), cell.p) == ps.end()) ps.push_back(cell.p);
    if (std::find(qs.begin(), qs.end(), cell.q) == qs.end()) qs.push_back(cell.q);
  }
  std::sort(ps.begin(), ps.end());
  std::sort(qs.begin(), qs.end());
  struct Metric {
    const char* file;
    const char* title;
    double SweepCell::*field;
  };
  const Metric metrics[] = {
      {"mutual_information.svg", "Mutual information", &SweepCell::mutual_information},
      {"matching_communities.svg", "Matching communities", &SweepCell::matching_count},
      {"modularity.svg", "Modularity", &SweepCell::modularity},
  };
  for (const Metric& metric : metrics) {
    Heatmap map{metric.title, "p (%)", "q (%)", {}, {}, {}};
    for (double p : ps) map.x_values.push_back(100 * p);
    for (double q : qs) map.y_values.push_back(100 * q);
    map.values.assign(qs.size(), std::vector<double>(ps.size(), 0.0));
    for (const SweepCell& cell : cells) {
      const size_t x = std::find(ps.begin(), ps.end(), cell.p) - ps.begin();
      const size_t y = std::find(qs.begin(), qs.end(), cell.q) - qs.begin();
      map.values[y][x] = cell.*metric.field;
    }
    if (absl::Status s = emit(metric.file, RenderHeatmapSvg(map)); !s.ok()) return s;
  }
  return written;
}

}  // namespace community_track
