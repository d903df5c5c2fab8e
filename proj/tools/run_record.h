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

// Provenance sidecars ("run.json") written next to every command's outputs.
// A sidecar holds the exact argument list, the working directory, resolved
// parameters and SHA-256 digests of every file read and written, which is
// enough to re-run the command and check that it reproduces its outputs.

#ifndef COMMUNITY_TRACK_TOOLS_RUN_RECORD_H_
#define COMMUNITY_TRACK_TOOLS_RUN_RECORD_H_

#include <string>
#include <vector>

#include "absl/status/status.h"
#include "absl/status/statusor.h"
#include "json.hpp"

namespace community_track::cli {

struct FileDigest {
  // Flag that named the file on the command line, e.g. "--out". Inputs
  // leave it empty.
  std::string flag;
  std::string path;
  std::string sha256;
};

struct RunRecord {
  std::string tool_version;
  std::string command;
  // Arguments after the program name, as given.
  std::vector<std::string> args;
  std::string working_directory;
  nlohmann::ordered_json parameters = nlohmann::ordered_json::object();
  std::vector<FileDigest> inputs;
  std::vector<FileDigest> outputs;
};

// Lowercase hex SHA-256 of the file's bytes.
absl::StatusOr<std::string> Sha256File(const std::string& path);

absl::Status AddInput(RunRecord& record, const std::string& path);
absl::Status AddOutput(RunRecord& record, const std::string& flag,
                       const std::string& path);

nlohmann::ordered_json ToJson(const RunRecord& record);
absl::StatusOr<RunRecord> FromJson(const nlohmann::ordered_json& json);

absl::Status WriteRunRecord(const RunRecord& record, const std::string& path);
absl::StatusOr<RunRecord> ReadRunRecord(const std::string& path);

}  // namespace community_track::cli

#endif  // COMMUNITY_TRACK_TOOLS_RUN_RECORD_H_
