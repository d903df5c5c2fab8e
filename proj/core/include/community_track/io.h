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

#ifndef COMMUNITY_TRACK_IO_H_
#define COMMUNITY_TRACK_IO_H_

#include <istream>
#include <ostream>
#include <string>

#include "absl/status/status.h"
#include "absl/status/statusor.h"
#include "community_track/graph.h"
#include "community_track/partition.h"

namespace community_track {

// Edge list: one undirected edge per line, `id_a<TAB>id_b<TAB>weight`.
// Blank lines and lines starting with '#' are ignored on input. Errors name
// `source` and the 1-based line number.
absl::StatusOr<Snapshot> ReadEdgeList(std::istream& in,
                                      const std::string& source,
                                      std::string month_label = "");
absl::StatusOr<Snapshot> ReadEdgeListFile(const std::string& path,
                                          std::string month_label = "");

// Writes every edge once, lower dense id first, rows in dense order.
void WriteEdgeList(const Snapshot& snapshot, std::ostream& out);
absl::Status WriteEdgeListFile(const Snapshot& snapshot,
                               const std::string& path);

// Partition file: a `#max_old_community=<n>` header followed by
// `external_id<TAB>community_id` lines.
absl::StatusOr<ExternalPartition> ReadPartition(std::istream& in,
                                                const std::string& source);
absl::StatusOr<ExternalPartition> ReadPartitionFile(const std::string& path);

void WritePartition(const Snapshot& snapshot, const Partition& partition,
                    std::ostream& out);
absl::Status WritePartitionFile(const Snapshot& snapshot,
                                const Partition& partition,
                                const std::string& path);

}  // namespace community_track

#endif  // COMMUNITY_TRACK_IO_H_
