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

#include "run_record.h"

#include <openssl/evp.h>

#include <array>
#include <fstream>

#include "absl/strings/str_cat.h"

namespace community_track::cli {

absl::StatusOr<std::string> Sha256File(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return absl::NotFoundError(absl::StrCat("cannot open '", path, "'"));

  EVP_MD_CTX* ctx = EVP_MD_CTX_new();
  EVP_DigestInit_ex(ctx, EVP_sha256(), nullptr);
  std::array<char, 1 << 16> buffer;
  while (in) {
    in.read(buffer.data(), buffer.size());
    EVP_DigestUpdate(ctx, buffer.data(), static_cast<size_t>(in.gcount()));
  }
  std::array<unsigned char, EVP_MAX_MD_SIZE> digest;
  unsigned int length = 0;
  EVP_DigestFinal_ex(ctx, digest.data(), &length);
  EVP_MD_CTX_free(ctx);
  if (in.bad()) return absl::DataLossError(absl::StrCat("error reading '", path, "'"));

  static constexpr char kHex[] = "0123456789abcdef";
  std::string hex;
  for (unsigned int i = 0; i < length; ++i) {
    hex.push_back(kHex[digest[i] >> 4]);
    hex.push_back(kHex[digest[i] & 15]);
  }
  return hex;
}

absl::Status AddInput(RunRecord& record, const std::string& path) {
  absl::StatusOr<std::string> digest = Sha256File(path);
  if (!digest.ok()) return digest.status();
  record.inputs.push_back({"", path, *digest});
  return absl::OkStatus();
}

absl::Status AddOutput(RunRecord& record, const std::string& flag,
                       const std::string& path) {
  absl::StatusOr<std::string> digest = Sha256File(path);
  if (!digest.ok()) return digest.status();
  record.outputs.push_back({flag, path, *digest});
  return absl::OkStatus();
}

nlohmann::ordered_json ToJson(const RunRecord& record) {
  nlohmann::ordered_json json;
  json["tool_version"] = record.tool_version;
  json["command"] = record.command;
  json["args"] = record.args;
  json["working_directory"] = record.working_directory;
  json["parameters"] = record.parameters;
  auto files = [](const std::vector<FileDigest>& digests, bool with_flag) {
    nlohmann::ordered_json list = nlohmann::ordered_json::array();
    for (const FileDigest& d : digests) {
      nlohmann::ordered_json entry;
      if (with_flag) entry["flag"] = d.flag;
      entry["path"] = d.path;
      entry["sha256"] = d.sha256;
      list.push_back(std::move(entry));
    }
    return list;
  };
  json["inputs"] = files(record.inputs, false);
  json["outputs"] = files(record.outputs, true);
  return json;
}

absl::StatusOr<RunRecord> FromJson(const nlohmann::ordered_json& json) {
  try {
    RunRecord record;
    record.tool_version = json.at("tool_version").get<std::string>();
    record.command = json.at("command").get<std::string>();
    record.args = json.at("args").get<std::vector<std::string>>();
    record.working_directory = json.at("working_directory").get<std::string>();
    record.parameters = json.at("parameters");
    for (const auto& entry : json.at("inputs")) {
      record.inputs.push_back({"", entry.at("path").get<std::string>(),
                               entry.at("sha256").get<std::string>()});
    }
    for (const auto& entry : json.at("outputs")) {
      record.outputs.push_back({entry.at("flag").get<std::string>(),
                                entry.at("path").get<std::string>(),
                                entry.at("sha256").get<std::string>()});
    }
    return record;
  } catch (const nlohmann::json::exception& e) {
    return absl::InvalidArgumentError(absl::StrCat("malformed run record: ", e.what()));
  }
}

absl::Status WriteRunRecord(const RunRecord& record, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) return absl::NotFoundError(absl::StrCat("cannot write '", path, "'"));
  out << ToJson(record).dump(2) << "\n";
  out.close();
  if (!out) return absl::DataLossError(absl::StrCat("error writing '", path, "'"));
  return absl::OkStatus();
}

absl::StatusOr<RunRecord> ReadRunRecord(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return absl::NotFoundError(absl::StrCat("cannot open '", path, "'"));
  nlohmann::ordered_json json =
      nlohmann::ordered_json::parse(in, nullptr, /*allow_exceptions=*/false);
  if (json.is_discarded()) {
    return absl::InvalidArgumentError(absl::StrCat(path, ": not valid JSON"));
  }
  return FromJson(json);
}

}  // namespace community_track::cli
