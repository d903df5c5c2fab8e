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

#include "community_track/io.h"

#include <charconv>
#include <fstream>
#include <vector>

#include "absl/strings/str_cat.h"
#include "absl/strings/str_split.h"
#include "absl/strings/string_view.h"
#include "absl/strings/strip.h"

namespace community_track {
namespace {

constexpr absl::string_view kMaxOldHeader = "#max_old_community=";

template <typename Int>
bool ParseInt(absl::string_view text, Int& value) {
  if (text.empty()) return false;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  return ec == std::errc() && ptr == text.data() + text.size();
}

absl::Status LineError(const std::string& source, size_t line,
                       absl::string_view what) {
  return absl::InvalidArgumentError(absl::StrCat(source, ":", line, ": ", what));
}

absl::Status OpenError(const std::string& path) {
  return absl::NotFoundError(absl::StrCat("cannot open '", path, "'"));
}

}  // namespace

absl::StatusOr<Snapshot> ReadEdgeList(std::istream& in,
                                      const std::string& source,
                                      std::string month_label) {
  SnapshotBuilder builder(std::move(month_label));
  std::string line;
  size_t line_number = 0;
  while (std::getline(in, line)) {
    ++line_number;
    absl::string_view text = absl::StripSuffix(line, "\r");
    if (text.empty() || text.front() == '#') continue;
    std::vector<absl::string_view> fields = absl::StrSplit(text, '\t');
    if (fields.size() != 3) {
      return LineError(source, line_number, "expected 3 tab-separated fields");
    }
    Weight weight = 0;
    if (!ParseInt(fields[2], weight) || weight == 0) {
      return LineError(source, line_number,
                       absl::StrCat("bad weight '", fields[2], "'"));
    }
    if (fields[0].empty() || fields[1].empty()) {
      return LineError(source, line_number, "empty external id");
    }
    absl::Status status = builder.AddEdge(fields[0], fields[1], weight);
    if (!status.ok()) return LineError(source, line_number, status.message());
  }
  if (in.bad()) {
    return absl::DataLossError(absl::StrCat("read error on '", source, "'"));
  }
  return std::move(builder).Build();
}

absl::StatusOr<Snapshot> ReadEdgeListFile(const std::string& path,
                                          std::string month_label) {
  std::ifstream in(path);
  if (!in) return OpenError(path);
  return ReadEdgeList(in, path, std::move(month_label));
}

void WriteEdgeList(const Snapshot& snapshot, std::ostream& out) {
  std::string buffer;
  for (NodeId u = 0; u < snapshot.node_count(); ++u) {
    auto nbrs = snapshot.neighbors(u);
    auto wts = snapshot.weights(u);
    for (size_t i = 0; i < nbrs.size(); ++i) {
      if (nbrs[i] < u) continue;
      absl::StrAppend(&buffer, snapshot.external_id(u), "\t",
                      snapshot.external_id(nbrs[i]), "\t", wts[i], "\n");
    }
    if (buffer.size() > (1 << 20)) {
      out << buffer;
      buffer.clear();
    }
  }
  out << buffer;
}

absl::Status WriteEdgeListFile(const Snapshot& snapshot,
                               const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) return OpenError(path);
  WriteEdgeList(snapshot, out);
  out.close();
  if (!out) return absl::DataLossError(absl::StrCat("write failed: ", path));
  return absl::OkStatus();
}

absl::StatusOr<ExternalPartition> ReadPartition(std::istream& in,
                                                const std::string& source) {
  ExternalPartition partition;
  std::string line;
  size_t line_number = 0;
  while (std::getline(in, line)) {
    ++line_number;
    absl::string_view text = absl::StripSuffix(line, "\r");
    if (text.empty()) continue;
    if (absl::ConsumePrefix(&text, kMaxOldHeader)) {
      if (!ParseInt(text, partition.max_old_community) ||
          partition.max_old_community < kNoOldCommunity) {
        return LineError(source, line_number, "bad max_old_community header");
      }
      continue;
    }
    if (text.front() == '#') continue;
    std::vector<absl::string_view> fields = absl::StrSplit(text, '\t');
    CommunityId community = 0;
    if (fields.size() != 2 || fields[0].empty() ||
        !ParseInt(fields[1], community) || community < 0) {
      return LineError(source, line_number,
                       "expected external_id<TAB>community_id");
    }
    if (!partition.communities.try_emplace(fields[0], community).second) {
      return LineError(source, line_number,
                       absl::StrCat("duplicate external id '", fields[0], "'"));
    }
  }
  if (in.bad()) {
    return absl::DataLossError(absl::StrCat("read error on '", source, "'"));
  }
  return partition;
}

absl::StatusOr<ExternalPartition> ReadPartitionFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) return OpenError(path);
  return ReadPartition(in, path);
}

void WritePartition(const Snapshot& snapshot, const Partition& partition,
                    std::ostream& out) {
  std::string buffer =
      absl::StrCat(kMaxOldHeader, partition.max_old_community(), "\n");
  for (NodeId u = 0; u < snapshot.node_count(); ++u) {
    absl::StrAppend(&buffer, snapshot.external_id(u), "\t",
                    partition.community(u), "\n");
    if (buffer.size() > (1 << 20)) {
      out << buffer;
      buffer.clear();
    }
  }
  out << buffer;
}

absl::Status WritePartitionFile(const Snapshot& snapshot,
                                const Partition& partition,
                                const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) return OpenError(path);
  WritePartition(snapshot, partition, out);
  out.close();
  if (!out) return absl::DataLossError(absl::StrCat("write failed: ", path));
  return absl::OkStatus();
}

}  // namespace community_track
