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

// The `community_track` command line: one subcommand per pipeline stage,
// plus `sweep` for parameter grids and `replay` for run.json sidecars.

#ifndef COMMUNITY_TRACK_TOOLS_CLI_H_
#define COMMUNITY_TRACK_TOOLS_CLI_H_

#include <ostream>
#include <string>
#include <vector>

namespace community_track::cli {

inline constexpr char kToolVersion[] = "0.1.0";

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitUsage = 2;

// Runs one invocation. `args` excludes the program name. Failures print a
// single `error: <code>: <message>` line to `err`; usage errors follow it
// with the usage text.
int Run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace community_track::cli

#endif  // COMMUNITY_TRACK_TOOLS_CLI_H_
