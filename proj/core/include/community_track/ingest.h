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

#ifndef COMMUNITY_TRACK_INGEST_H_
#define COMMUNITY_TRACK_INGEST_H_

#include <chrono>
#include <cstdint>
#include <istream>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "absl/container/flat_hash_map.h"
#include "absl/status/statusor.h"
#include "absl/strings/string_view.h"
#include "community_track/graph.h"

namespace community_track {

enum class EventKind { kCall, kSms };

// One anonymized communication event.
struct CdrRecord {
  std::string origin;
  std::string target;
  std::chrono::sys_seconds timestamp;
  EventKind kind = EventKind::kCall;
  uint64_t duration_seconds = 0;
};

struct YearMonth {
  int year = 1970;
  unsigned month = 1;

  // Months since year 0, so that consecutive months differ by one.
  int Index() const { return year * 12 + static_cast<int>(month) - 1; }
  std::string ToString() const;

  static YearMonth Of(std::chrono::sys_seconds time);
  // Parses "YYYY-MM".
  static absl::StatusOr<YearMonth> Parse(absl::string_view text);

  friend bool operator==(const YearMonth&, const YearMonth&) = default;
};

// The anchor month and the span-1 months before it.
struct WindowSpec {
  YearMonth anchor;
  int span = 3;

  bool Contains(std::chrono::sys_seconds time) const;
};

struct CdrParseResult {
  std::vector<CdrRecord> records;
  uint64_t malformed_lines = 0;
};

// Reads `origin,target,YYYY-MM-DDTHH:MM:SS[Z],call|sms,duration` lines.
// Malformed lines are counted and skipped; an optional header line whose
// first field is "origin" is ignored. Fails only if the stream breaks.
absl::StatusOr<CdrParseResult> ParseCdr(std::istream& in,
                                        const std::string& source);
absl::StatusOr<CdrParseResult> ParseCdrFile(const std::string& path);

// Parses one CSV line; nullopt when malformed.
std::optional<CdrRecord> ParseCdrLine(absl::string_view line);

using DirectedCounts =
    absl::flat_hash_map<std::pair<std::string, std::string>, uint64_t>;

// Events per ordered (origin, target) pair within the window. Calls and sms
// count one each; records with origin == target are dropped.
DirectedCounts AggregateDirected(std::span<const CdrRecord> records,
                                 const WindowSpec& window);

// Keeps a pair only when both directions carry traffic, weighted by the sum
// of both directions. Edges come out with a < b, sorted.
std::vector<ExternalEdge> Symmetrize(const DirectedCounts& counts);

inline constexpr uint64_t kDefaultMaxDegree = 200;

// Drops every node with more than `max_degree` distinct neighbors, and its
// edges. Degrees are those of the input; the filter is applied once.
// `edges` must not repeat a pair.
std::vector<ExternalEdge> FilterHighDegree(std::span<const ExternalEdge> edges,
                                           uint64_t max_degree = kDefaultMaxDegree);

// Aggregate, symmetrize, filter and build the month's snapshot.
absl::StatusOr<Snapshot> BuildMonth(std::span<const CdrRecord> records,
                                    const WindowSpec& window,
                                    uint64_t max_degree = kDefaultMaxDegree);

}  // namespace community_track

#endif  // COMMUNITY_TRACK_INGEST_H_
