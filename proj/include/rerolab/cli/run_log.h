//
// Copyright 2026 The Rerolab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
//

#ifndef REROLAB_CLI_RUN_LOG_H_
#define REROLAB_CLI_RUN_LOG_H_

#include <cstdint>
#include <string>

#include "absl/status/status.h"
#include "json.hpp"

namespace rerolab {

inline constexpr char kToolVersion[] = "0.1.0";

// One JSONL line. Everything except `timestamp` is a pure function of the
// config bytes, the mode and the seed.
struct RunRecord {
  std::string config_hash;
  std::string timestamp;  // RFC 3339, UTC
  std::string mode;
  std::uint64_t seed = 0;
  std::string tool_version = kToolVersion;
  nlohmann::ordered_json result;
};

nlohmann::ordered_json ToJson(const RunRecord& record);

// The record without its timestamp, as compact JSON.
std::string Payload(const RunRecord& record);

std::string CurrentTimestamp();

// Appends one line to `path`, creating the file if needed.
absl::Status AppendRunRecord(const std::string& path, const RunRecord& record);

}  // namespace rerolab

#endif  // REROLAB_CLI_RUN_LOG_H_
