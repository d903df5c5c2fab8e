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

#include "community_track/ingest.h"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <optional>

#include "absl/strings/match.h"
#include "absl/strings/str_cat.h"
#include "absl/strings/str_format.h"
#include "absl/strings/str_split.h"
#include "absl/strings/strip.h"

namespace community_track {
namespace {

bool ParseDigits(absl::string_view text, size_t width, int& value) {
  if (text.size() != width) return false;
  for (char c : text) {
    if (c < '0' || c > '9') return false;
  }
  std::from_chars(text.data(), text.data() + text.size(), value);
  return true;
}

std::optional<std::chrono::sys_seconds> ParseTimestamp(absl::string_view text) {
  absl::ConsumeSuffix(&text, "Z");
  // YYYY-MM-DDTHH:MM:SS
  if (text.size() != 19 || text[4] != '-' || text[7] != '-' ||
      text[10] != 'T' || text[13] != ':' || text[16] != ':') {
    return std::nullopt;
  }
  int year, month, day, hour, minute, second;
  if (!ParseDigits(text.substr(0, 4), 4, year) ||
      !ParseDigits(text.substr(5, 2), 2, month) ||
      !ParseDigits(text.substr(8, 2), 2, day) ||
      !ParseDigits(text.substr(11, 2), 2, hour) ||
      !ParseDigits(text.substr(14, 2), 2, minute) ||
      !ParseDigits(text.substr(17, 2), 2, second)) {
    return std::nullopt;
  }
  const std::chrono::year_month_day date{
      std::chrono::year(year), std::chrono::month(static_cast<unsigned>(month)),
      std::chrono::day(static_cast<unsigned>(day))};
  if (!date.ok() || hour > 23 || minute > 59 || second > 59) return std::nullopt;
  return std::chrono::sys_days(date) + std::chrono::hours(hour) +
         std::chrono::minutes(minute) + std::chrono::seconds(second);
}

}  // namespace

std::string YearMonth::ToString() const {
  return absl::StrFormat("%04d-%02d", year, month);
}

YearMonth YearMonth::Of(std::chrono::sys_seconds time) {
  const std::chrono::year_month_day date{
      std::chrono::floor<std::chrono::days>(time)};
  return {static_cast<int>(date.year()), static_cast<unsigned>(date.month())};
}

absl::StatusOr<YearMonth> YearMonth::Parse(absl::string_view text) {
  int year = 0, month = 0;
  if (text.size() != 7 || text[4] != '-' ||
      !ParseDigits(text.substr(0, 4), 4, year) ||
      !ParseDigits(text.substr(5, 2), 2, month) || month < 1 || month > 12) {
    return absl::InvalidArgumentError(
        absl::StrCat("bad month '", text, "', expected YYYY-MM"));
  }
  return YearMonth{year, static_cast<unsigned>(month)};
}

bool WindowSpec::Contains(std::chrono::sys_seconds time) const {
  const int offset = anchor.Index() - YearMonth::Of(time).Index();
  return offset >= 0 && offset < span;
}

std::optional<CdrRecord> ParseCdrLine(absl::string_view line) {
  std::vector<absl::string_view> fields = absl::StrSplit(line, ',');
  if (fields.size() != 5 || fields[0].empty() || fields[1].empty()) {
    return std::nullopt;
  }
  CdrRecord record;
  if (fields[3] == "call") {
    record.kind = EventKind::kCall;
  } else if (fields[3] == "sms") {
    record.kind = EventKind::kSms;
  } else {
    return std::nullopt;
  }
  std::optional<std::chrono::sys_seconds> timestamp = ParseTimestamp(fields[2]);
  if (!timestamp) return std::nullopt;
  record.timestamp = *timestamp;
  if (!fields[4].empty()) {
    auto [ptr, ec] = std::from_chars(fields[4].data(),
                                     fields[4].data() + fields[4].size(),
                                     record.duration_seconds);
    if (ec != std::errc() || ptr != fields[4].data() + fields[4].size()) {
      return std::nullopt;
    }
  }
  if (record.kind == EventKind::kSms) record.duration_seconds = 0;
  record.origin = std::string(fields[0]);
  record.target = std::string(fields[1]);
  return record;
}

absl::StatusOr<CdrParseResult> ParseCdr(std::istream& in,
                                        const std::string& source) {
  CdrParseResult result;
  std::string line;
  bool first = true;
  while (std::getline(in, line)) {
    absl::string_view text = absl::StripSuffix(line, "\r");
    const bool header = first && absl::StartsWith(text, "origin,");
    first = false;
    if (header || text.empty()) continue;
    std::optional<CdrRecord> record = ParseCdrLine(text);
    if (record) {
      result.records.push_back(*std::move(record));
    } else {
      ++result.malformed_lines;
    }
  }
  if (in.bad()) {
    return absl::DataLossError(absl::StrCat("read error on '", source, "'"));
  }
  return result;
}

absl::StatusOr<CdrParseResult> ParseCdrFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) return absl::NotFoundError(absl::StrCat("cannot open '", path, "'"));
  return ParseCdr(in, path);
}

DirectedCounts AggregateDirected(std::span<const CdrRecord> records,
                                 const WindowSpec& window) {
  DirectedCounts counts;
  for (const CdrRecord& record : records) {
    if (record.origin == record.target) continue;
    if (!window.Contains(record.timestamp)) continue;
    ++counts[{record.origin, record.target}];
  }
  return counts;
}

std::vector<ExternalEdge> Symmetrize(const DirectedCounts& counts) {
  std::vector<ExternalEdge> edges;
  for (const auto& [key, forward] : counts) {
    const auto& [a, b] = key;
    if (!(a < b) || forward == 0) continue;
    auto back = counts.find(std::make_pair(b, a));
    if (back == counts.end() || back->second == 0) continue;
    edges.push_back({a, b, forward + back->second});
  }
  std::sort(edges.begin(), edges.end(),
            [](const ExternalEdge& x, const ExternalEdge& y) {
              return std::tie(x.a, x.b) < std::tie(y.a, y.b);
            });
  return edges;
}

std::vector<ExternalEdge> FilterHighDegree(std::span<const ExternalEdge> edges,
                                           uint64_t max_degree) {
  absl::flat_hash_map<absl::string_view, uint64_t> degree;
  for (const ExternalEdge& e : edges) {
    ++degree[e.a];
    ++degree[e.b];
  }
  std::vector<ExternalEdge> kept;
  for (const ExternalEdge& e : edges) {
    if (degree[e.a] <= max_degree && degree[e.b] <= max_degree) {
      kept.push_back(e);
    }
  }
  return kept;
}

absl::StatusOr<Snapshot> BuildMonth(std::span<const CdrRecord> records,
                                    const WindowSpec& window,
                                    uint64_t max_degree) {
  const std::vector<ExternalEdge> edges =
      FilterHighDegree(Symmetrize(AggregateDirected(records, window)), max_degree);
  return Snapshot::FromEdges(edges, window.anchor.ToString());
}

}  // namespace community_track
