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

#ifndef REROLAB_CLI_CONFIG_H_
#define REROLAB_CLI_CONFIG_H_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "absl/status/statusor.h"
#include "absl/strings/string_view.h"
#include "json.hpp"
#include "rerolab/games/game.h"
#include "rerolab/taxonomy/registry.h"

namespace rerolab {

enum class ConfigKind { kGame, kGrid, kTaxonomy };

std::string ConfigKindName(ConfigKind kind);

// A parsed configuration document. Exactly one of game / grid / taxonomy is
// meaningful, as named by `kind`.
struct LoadedConfig {
  ConfigKind kind = ConfigKind::kGame;
  // Compact dump of the document with object keys sorted, and its SHA-256.
  std::string canonical;
  std::string hash;
  std::optional<GameConfig> game;
  std::vector<GameConfig> grid;
  std::optional<AttackRegistry> taxonomy;
};

absl::StatusOr<LoadedConfig> ParseConfig(absl::string_view text);
absl::StatusOr<LoadedConfig> LoadConfigFile(const std::string& path);

std::string CanonicalBytes(const nlohmann::json& document);

// Lowercase hex SHA-256.
std::string Sha256Hex(absl::string_view bytes);

// Descriptor parsers. Unknown keys are errors.
absl::StatusOr<RecordUniverse> UniverseFromJson(const nlohmann::json& json);
absl::StatusOr<Distribution> DistributionFromJson(
    const nlohmann::json& json, const RecordUniverse& universe);
absl::StatusOr<MechanismSpec> MechanismFromJson(const nlohmann::json& json);
absl::StatusOr<AdversaryKind> AdversaryFromJson(const nlohmann::json& json);
absl::StatusOr<LossSpec> LossFromJson(const nlohmann::json& json);
absl::StatusOr<GameConfig> GameConfigFromJson(const nlohmann::json& json);

// Cells of a grid: the cross product of mechanisms (epsilon-taking ones once
// per listed epsilon), universe sizes and dataset sizes, followed by any
// explicit "cells".
absl::StatusOr<std::vector<GameConfig>> GridFromJson(const nlohmann::json& json);

// Bitstring universe when `size` is a power of two, else categorical with
// labels r0, r1, ...
absl::StatusOr<RecordUniverse> UniverseOfSize(std::uint64_t size);

// Descriptors in the same shape the parsers accept.
nlohmann::ordered_json UniverseToJson(const RecordUniverse& universe);
nlohmann::ordered_json DistributionToJson(const Distribution& distribution);
nlohmann::ordered_json MechanismToJson(const MechanismSpec& spec);
nlohmann::ordered_json AdversaryToJson(const AdversaryKind& kind);
nlohmann::ordered_json LossToJson(const LossSpec& spec);
nlohmann::ordered_json GameConfigToJson(const GameConfig& config);

}  // namespace rerolab

#endif  // REROLAB_CLI_CONFIG_H_
