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

#include "rerolab/cli/run_log.h"

#include <fstream>

#include "absl/strings/str_cat.h"
#include "absl/time/clock.h"
#include "absl/time/time.h"

namespace rerolab {

nlohmann::ordered_json ToJson(const RunRecord& record) {
  nlohmann::ordered_json out;
  out["config_hash"] = record.config_hash;
  out["timestamp"] = record.timestamp;
  out["mode"] = record.mode;
  out["seed"] = record.seed;
  out["tool_version"] = record.tool_version;
  out["result"] = record.result;
  return out;
}

std::string Payload(const RunRecord& record) {
  nlohmann::ordered_json out = ToJson(record);
  out.erase("timestamp");
  return out.dump();
}

std::string CurrentTimestamp() {
  return absl::FormatTime("%Y-%m-%dT%H:%M:%E3SZ", absl::Now(),
                          absl::UTCTimeZone());
}

absl::Status AppendRunRecord(const std::string& path, const RunRecord& record) {
  std::ofstream out(path, std::ios::app | std::ios::binary);
  if (!out) {
    return absl::PermissionDeniedError(
        absl::StrCat("cannot open run log '", path, "'"));
  }
  out << ToJson(record).dump() << '\n';
  out.flush();
  if (!out) {
    return absl::DataLossError(absl::StrCat("failed writing '", path, "'"));
  }
  return absl::OkStatus();
}

}  // namespace rerolab
