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

#include "rerolab/cli/config.h"

#include <openssl/evp.h>

#include <algorithm>
#include <bit>
#include <cmath>
#include <fstream>
#include <initializer_list>
#include <sstream>
#include <utility>

#include "absl/status/status.h"
#include "absl/strings/str_cat.h"
#include "absl/strings/str_join.h"
#include "rerolab/base/status_macros.h"

namespace rerolab {
namespace {

using nlohmann::json;
using nlohmann::ordered_json;

absl::Status CheckKeys(const json& object, absl::string_view what,
                       std::initializer_list<absl::string_view> allowed) {
  if (!object.is_object()) {
    return absl::InvalidArgumentError(
        absl::StrCat(what, " must be a JSON object"));
  }
  for (const auto& [key, value] : object.items()) {
    if (std::find(allowed.begin(), allowed.end(), key) == allowed.end()) {
      return absl::InvalidArgumentError(absl::StrCat(
          "unknown field '", key, "' in ", what, " (allowed: ",
          absl::StrJoin(allowed, ", "), ")"));
    }
  }
  return absl::OkStatus();
}

absl::StatusOr<std::string> GetString(const json& object, const char* key,
                                      absl::string_view what) {
  if (!object.contains(key)) {
    return absl::InvalidArgumentError(
        absl::StrCat(what, " needs '", key, "'"));
  }
  if (!object[key].is_string()) {
    return absl::InvalidArgumentError(
        absl::StrCat("'", key, "' in ", what, " must be a string"));
  }
  return object[key].get<std::string>();
}

absl::StatusOr<std::int64_t> GetInt(const json& object, const char* key,
                                    absl::string_view what) {
  if (!object.contains(key)) {
    return absl::InvalidArgumentError(
        absl::StrCat(what, " needs '", key, "'"));
  }
  if (!object[key].is_number_integer()) {
    return absl::InvalidArgumentError(
        absl::StrCat("'", key, "' in ", what, " must be an integer"));
  }
  return object[key].get<std::int64_t>();
}

absl::StatusOr<double> GetNumber(const json& object, const char* key,
                                 absl::string_view what) {
  if (!object.contains(key)) {
    return absl::InvalidArgumentError(
        absl::StrCat(what, " needs '", key, "'"));
  }
  if (!object[key].is_number()) {
    return absl::InvalidArgumentError(
        absl::StrCat("'", key, "' in ", what, " must be a number"));
  }
  return object[key].get<double>();
}

absl::StatusOr<RecordId> ParseRecord(const json& value,
                                     const RecordUniverse& universe) {
  if (value.is_string()) return universe.Parse(value.get<std::string>());
  if (value.is_number_integer()) return universe.Parse(value.dump());
  return absl::InvalidArgumentError(
      absl::StrCat("record must be a string, got ", value.dump()));
}

absl::StatusOr<int> ToInt(std::int64_t value, absl::string_view what) {
  if (value < 1 || value > 1'000'000) {
    return absl::InvalidArgumentError(
        absl::StrCat(what, " must lie in [1, 1000000], got ", value));
  }
  return static_cast<int>(value);
}

}  // namespace

std::string ConfigKindName(ConfigKind kind) {
  switch (kind) {
    case ConfigKind::kGame:
      return "game";
    case ConfigKind::kGrid:
      return "grid";
    case ConfigKind::kTaxonomy:
      return "taxonomy";
  }
  return "unknown";
}

std::string CanonicalBytes(const json& document) {
  // nlohmann::json keeps object keys sorted, so a compact dump is canonical.
  return document.dump();
}

std::string Sha256Hex(absl::string_view bytes) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int length = 0;
  EVP_Digest(bytes.data(), bytes.size(), digest, &length, EVP_sha256(),
             nullptr);
  static constexpr char kHex[] = "0123456789abcdef";
  std::string out;
  out.reserve(2 * length);
  for (unsigned int i = 0; i < length; ++i) {
    out += kHex[digest[i] >> 4];
    out += kHex[digest[i] & 0xf];
  }
  return out;
}

absl::StatusOr<RecordUniverse> UniverseFromJson(const json& object) {
  REROLAB_ASSIGN_OR_RETURN(std::string kind,
                           GetString(object, "kind", "universe"));
  if (kind == "bitstring") {
    REROLAB_RETURN_IF_ERROR(CheckKeys(object, "universe", {"kind", "k"}));
    REROLAB_ASSIGN_OR_RETURN(std::int64_t k, GetInt(object, "k", "universe"));
    if (k < 1 || k > 24) {
      return absl::InvalidArgumentError(
          absl::StrCat("bitstring length must lie in [1, 24], got ", k));
    }
    return RecordUniverse::Bitstring(static_cast<int>(k));
  }
  if (kind == "categorical") {
    REROLAB_RETURN_IF_ERROR(CheckKeys(object, "universe", {"kind", "labels"}));
    if (!object.contains("labels") || !object["labels"].is_array()) {
      return absl::InvalidArgumentError(
          "categorical universe needs a 'labels' list");
    }
    std::vector<std::string> labels;
    for (const json& label : object["labels"]) {
      if (!label.is_string()) {
        return absl::InvalidArgumentError("labels must be strings");
      }
      labels.push_back(label.get<std::string>());
    }
    return RecordUniverse::Categorical(std::move(labels));
  }
  if (kind == "int_vector") {
    REROLAB_RETURN_IF_ERROR(
        CheckKeys(object, "universe", {"kind", "dims", "lo", "hi"}));
    REROLAB_ASSIGN_OR_RETURN(std::int64_t dims,
                             GetInt(object, "dims", "universe"));
    REROLAB_ASSIGN_OR_RETURN(std::int64_t lo, GetInt(object, "lo", "universe"));
    REROLAB_ASSIGN_OR_RETURN(std::int64_t hi, GetInt(object, "hi", "universe"));
    if (dims < 1 || dims > 24) {
      return absl::InvalidArgumentError(
          absl::StrCat("int_vector dims must lie in [1, 24], got ", dims));
    }
    return RecordUniverse::IntVector(static_cast<int>(dims), lo, hi);
  }
  return absl::InvalidArgumentError(absl::StrCat(
      "unknown universe kind '", kind,
      "' (expected bitstring, categorical or int_vector)"));
}

absl::StatusOr<Distribution> DistributionFromJson(
    const json& object, const RecordUniverse& universe) {
  REROLAB_ASSIGN_OR_RETURN(std::string kind,
                           GetString(object, "kind", "distribution"));
  if (kind == "uniform") {
    REROLAB_RETURN_IF_ERROR(CheckKeys(object, "distribution", {"kind"}));
    return Distribution::Uniform(universe);
  }
  if (kind == "pmf") {
    REROLAB_RETURN_IF_ERROR(CheckKeys(object, "distribution", {"kind", "probs"}));
    if (!object.contains("probs") || !object["probs"].is_array()) {
      return absl::InvalidArgumentError("pmf distribution needs a 'probs' list");
    }
    std::vector<double> probs;
    for (const json& p : object["probs"]) {
      if (!p.is_number()) {
        return absl::InvalidArgumentError("probs must be numbers");
      }
      probs.push_back(p.get<double>());
    }
    return Distribution::FromPmf(universe, std::move(probs));
  }
  if (kind == "point_mass") {
    REROLAB_RETURN_IF_ERROR(
        CheckKeys(object, "distribution", {"kind", "record"}));
    if (!object.contains("record")) {
      return absl::InvalidArgumentError("point_mass distribution needs 'record'");
    }
    REROLAB_ASSIGN_OR_RETURN(RecordId record,
                             ParseRecord(object["record"], universe));
    return Distribution::PointMass(universe, record);
  }
  return absl::InvalidArgumentError(absl::StrCat(
      "unknown distribution kind '", kind,
      "' (expected uniform, pmf or point_mass)"));
}

absl::StatusOr<MechanismSpec> MechanismFromJson(const json& object) {
  REROLAB_RETURN_IF_ERROR(CheckKeys(object, "mechanism", {"kind", "epsilon"}));
  REROLAB_ASSIGN_OR_RETURN(std::string name,
                           GetString(object, "kind", "mechanism"));
  REROLAB_ASSIGN_OR_RETURN(MechanismKind kind, ParseMechanismKind(name));
  MechanismSpec spec{kind, 0.0};
  if (MechanismTakesEpsilon(kind)) {
    REROLAB_ASSIGN_OR_RETURN(spec.epsilon,
                             GetNumber(object, "epsilon", "mechanism"));
  } else if (object.contains("epsilon")) {
    return absl::InvalidArgumentError(
        absl::StrCat("mechanism ", name, " does not take epsilon"));
  }
  return spec;
}

absl::StatusOr<AdversaryKind> AdversaryFromJson(const json& object) {
  REROLAB_RETURN_IF_ERROR(
      CheckKeys(object, "adversary", {"kind", "samples", "seed"}));
  REROLAB_ASSIGN_OR_RETURN(std::string name,
                           GetString(object, "kind", "adversary"));
  REROLAB_ASSIGN_OR_RETURN(AdversaryType type, ParseAdversaryType(name));
  AdversaryKind kind{type};
  if (type == AdversaryType::kEmpiricalBayes) {
    REROLAB_ASSIGN_OR_RETURN(std::int64_t samples,
                             GetInt(object, "samples", "adversary"));
    REROLAB_ASSIGN_OR_RETURN(kind.samples, ToInt(samples, "samples"));
    if (object.contains("seed")) {
      if (!object["seed"].is_number_unsigned()) {
        return absl::InvalidArgumentError(
            "adversary seed must be a non-negative integer");
      }
      kind.seed = object["seed"].get<std::uint64_t>();
    }
  } else if (object.contains("samples") || object.contains("seed")) {
    return absl::InvalidArgumentError(absl::StrCat(
        "samples and seed are only valid for empirical_bayes, not ", name));
  }
  return kind;
}

absl::StatusOr<LossSpec> LossFromJson(const json& object) {
  REROLAB_RETURN_IF_ERROR(CheckKeys(object, "loss", {"kind", "eta"}));
  REROLAB_ASSIGN_OR_RETURN(std::string name, GetString(object, "kind", "loss"));
  REROLAB_ASSIGN_OR_RETURN(LossKind kind, ParseLossKind(name));
  LossSpec spec{kind, 0.0};
  if (object.contains("eta")) {
    REROLAB_ASSIGN_OR_RETURN(spec.eta, GetNumber(object, "eta", "loss"));
  }
  return spec;
}

absl::StatusOr<GameConfig> GameConfigFromJson(const json& object) {
  REROLAB_RETURN_IF_ERROR(CheckKeys(
      object, "game",
      {"variant", "universe", "distribution", "n", "mechanism", "adversary",
       "loss", "fixed_context", "enumeration_cap"}));
  GameVariant variant = GameVariant::kAvgDistReRo;
  if (object.contains("variant")) {
    REROLAB_ASSIGN_OR_RETURN(std::string name,
                             GetString(object, "variant", "game"));
    REROLAB_ASSIGN_OR_RETURN(variant, ParseGameVariant(name));
  }
  if (!object.contains("universe")) {
    return absl::InvalidArgumentError("game needs 'universe'");
  }
  REROLAB_ASSIGN_OR_RETURN(RecordUniverse universe,
                           UniverseFromJson(object["universe"]));
  Distribution prior = Distribution::Uniform(universe);
  if (object.contains("distribution")) {
    REROLAB_ASSIGN_OR_RETURN(
        prior, DistributionFromJson(object["distribution"], universe));
  }
  REROLAB_ASSIGN_OR_RETURN(std::int64_t n_raw, GetInt(object, "n", "game"));
  REROLAB_ASSIGN_OR_RETURN(int n, ToInt(n_raw, "n"));
  if (!object.contains("mechanism")) {
    return absl::InvalidArgumentError("game needs 'mechanism'");
  }
  REROLAB_ASSIGN_OR_RETURN(MechanismSpec mechanism,
                           MechanismFromJson(object["mechanism"]));
  AdversaryKind adversary;
  if (object.contains("adversary")) {
    REROLAB_ASSIGN_OR_RETURN(adversary, AdversaryFromJson(object["adversary"]));
  }
  LossSpec loss;
  if (object.contains("loss")) {
    REROLAB_ASSIGN_OR_RETURN(loss, LossFromJson(object["loss"]));
  }
  GameConfig config{
      .variant = variant,
      .prior = std::move(prior),
      .n = n,
      .mechanism = mechanism,
      .adversary = adversary,
      .loss = loss,
  };
  if (object.contains("fixed_context")) {
    if (!object["fixed_context"].is_array()) {
      return absl::InvalidArgumentError("'fixed_context' must be a list");
    }
    std::vector<RecordId> records;
    for (const json& value : object["fixed_context"]) {
      REROLAB_ASSIGN_OR_RETURN(RecordId record, ParseRecord(value, universe));
      records.push_back(record);
    }
    config.fixed_context = Dataset(std::move(records));
  }
  if (object.contains("enumeration_cap")) {
    if (!object["enumeration_cap"].is_number_unsigned()) {
      return absl::InvalidArgumentError(
          "'enumeration_cap' must be a positive integer");
    }
    config.enumeration_cap = object["enumeration_cap"].get<std::uint64_t>();
  }
  // Surface inconsistencies (context length, universe mismatches) at load.
  REROLAB_RETURN_IF_ERROR(Game::Create(config).status());
  return config;
}

absl::StatusOr<RecordUniverse> UniverseOfSize(std::uint64_t size) {
  if (size < 1 || size > kMaxUniverseSize) {
    return absl::InvalidArgumentError(
        absl::StrCat("universe size must lie in [1, ", kMaxUniverseSize,
                     "], got ", size));
  }
  if (size >= 2 && std::has_single_bit(size)) {
    return RecordUniverse::Bitstring(std::countr_zero(size));
  }
  std::vector<std::string> labels;
  for (std::uint64_t i = 0; i < size; ++i) labels.push_back(absl::StrCat("r", i));
  return RecordUniverse::Categorical(std::move(labels));
}

absl::StatusOr<std::vector<GameConfig>> GridFromJson(const json& object) {
  REROLAB_RETURN_IF_ERROR(CheckKeys(
      object, "grid",
      {"mechanisms", "epsilons", "universe_sizes", "ns", "distribution",
       "adversary", "loss", "enumeration_cap", "cells"}));
  const auto list = [&](const char* key) -> absl::StatusOr<json> {
    if (!object.contains(key)) return json::array();
    if (!object[key].is_array()) {
      return absl::InvalidArgumentError(
          absl::StrCat("'", key, "' in grid must be a list"));
    }
    return object[key];
  };
  REROLAB_ASSIGN_OR_RETURN(json mechanisms, list("mechanisms"));
  REROLAB_ASSIGN_OR_RETURN(json epsilons, list("epsilons"));
  REROLAB_ASSIGN_OR_RETURN(json sizes, list("universe_sizes"));
  REROLAB_ASSIGN_OR_RETURN(json ns, list("ns"));
  REROLAB_ASSIGN_OR_RETURN(json cells, list("cells"));

  if (object.contains("distribution")) {
    const json& d = object["distribution"];
    if (!d.is_object() || d.value("kind", "") != "uniform" || d.size() != 1) {
      return absl::InvalidArgumentError(
          "grid distribution must be {\"kind\": \"uniform\"}; use explicit "
          "cells for other priors");
    }
  }
  AdversaryKind adversary;
  if (object.contains("adversary")) {
    REROLAB_ASSIGN_OR_RETURN(adversary, AdversaryFromJson(object["adversary"]));
  }
  LossSpec loss;
  if (object.contains("loss")) {
    REROLAB_ASSIGN_OR_RETURN(loss, LossFromJson(object["loss"]));
  }
  std::uint64_t cap = kDefaultEnumerationCap;
  if (object.contains("enumeration_cap")) {
    if (!object["enumeration_cap"].is_number_unsigned()) {
      return absl::InvalidArgumentError(
          "'enumeration_cap' must be a positive integer");
    }
    cap = object["enumeration_cap"].get<std::uint64_t>();
  }

  std::vector<MechanismSpec> specs;
  for (const json& m : mechanisms) {
    REROLAB_RETURN_IF_ERROR(CheckKeys(m, "grid mechanism", {"kind", "epsilon"}));
    REROLAB_ASSIGN_OR_RETURN(std::string name,
                             GetString(m, "kind", "grid mechanism"));
    REROLAB_ASSIGN_OR_RETURN(MechanismKind kind, ParseMechanismKind(name));
    if (!MechanismTakesEpsilon(kind) || m.contains("epsilon")) {
      REROLAB_ASSIGN_OR_RETURN(MechanismSpec spec, MechanismFromJson(m));
      specs.push_back(spec);
      continue;
    }
    if (epsilons.empty()) {
      return absl::InvalidArgumentError(
          absl::StrCat("grid mechanism ", name, " needs 'epsilons'"));
    }
    for (const json& e : epsilons) {
      if (!e.is_number()) {
        return absl::InvalidArgumentError("epsilons must be numbers");
      }
      specs.push_back({kind, e.get<double>()});
    }
  }

  std::vector<GameConfig> out;
  for (const MechanismSpec& spec : specs) {
    for (const json& size : sizes) {
      if (!size.is_number_unsigned()) {
        return absl::InvalidArgumentError(
            "universe_sizes must be positive integers");
      }
      REROLAB_ASSIGN_OR_RETURN(RecordUniverse universe,
                               UniverseOfSize(size.get<std::uint64_t>()));
      for (const json& n_value : ns) {
        if (!n_value.is_number_integer()) {
          return absl::InvalidArgumentError("ns must be integers");
        }
        REROLAB_ASSIGN_OR_RETURN(int n,
                                 ToInt(n_value.get<std::int64_t>(), "n"));
        out.push_back(GameConfig{
            .variant = GameVariant::kAvgDistReRo,
            .prior = Distribution::Uniform(universe),
            .n = n,
            .mechanism = spec,
            .adversary = adversary,
            .loss = loss,
            .enumeration_cap = cap,
        });
      }
    }
  }
  for (const json& cell : cells) {
    REROLAB_ASSIGN_OR_RETURN(GameConfig config, GameConfigFromJson(cell));
    config.variant = GameVariant::kAvgDistReRo;
    config.fixed_context.reset();
    out.push_back(std::move(config));
  }
  return out;
}

absl::StatusOr<LoadedConfig> ParseConfig(absl::string_view text) {
  json document = json::parse(text.begin(), text.end(), nullptr, false);
  if (document.is_discarded()) {
    return absl::InvalidArgumentError("config is not valid JSON");
  }
  if (!document.is_object() || document.size() != 1) {
    return absl::InvalidArgumentError(
        "config must be an object with exactly one of 'game', 'grid' or "
        "'taxonomy'");
  }
  LoadedConfig loaded;
  loaded.canonical = CanonicalBytes(document);
  loaded.hash = Sha256Hex(loaded.canonical);
  if (document.contains("game")) {
    loaded.kind = ConfigKind::kGame;
    REROLAB_ASSIGN_OR_RETURN(GameConfig game,
                             GameConfigFromJson(document["game"]));
    loaded.game = std::move(game);
  } else if (document.contains("grid")) {
    loaded.kind = ConfigKind::kGrid;
    REROLAB_ASSIGN_OR_RETURN(loaded.grid, GridFromJson(document["grid"]));
  } else if (document.contains("taxonomy")) {
    loaded.kind = ConfigKind::kTaxonomy;
    REROLAB_ASSIGN_OR_RETURN(AttackRegistry registry,
                             AttackRegistry::FromJson(document["taxonomy"]));
    loaded.taxonomy = std::move(registry);
  } else {
    return absl::InvalidArgumentError(absl::StrCat(
        "unknown config kind '", document.begin().key(),
        "' (expected game, grid or taxonomy)"));
  }
  return loaded;
}

absl::StatusOr<LoadedConfig> LoadConfigFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    return absl::NotFoundError(absl::StrCat("cannot read config '", path, "'"));
  }
  std::stringstream buffer;
  buffer << in.rdbuf();
  absl::StatusOr<LoadedConfig> loaded = ParseConfig(buffer.str());
  if (!loaded.ok()) {
    return absl::Status(loaded.status().code(),
                        absl::StrCat(path, ": ", loaded.status().message()));
  }
  return loaded;
}

ordered_json UniverseToJson(const RecordUniverse& universe) {
  ordered_json out;
  switch (universe.kind()) {
    case RecordUniverse::Kind::kBitstring:
      out["kind"] = "bitstring";
      out["k"] = universe.dims();
      break;
    case RecordUniverse::Kind::kCategorical:
      out["kind"] = "categorical";
      out["labels"] = universe.labels();
      break;
    case RecordUniverse::Kind::kIntVector:
      out["kind"] = "int_vector";
      out["dims"] = universe.dims();
      out["lo"] = universe.lo();
      out["hi"] = universe.hi();
      break;
  }
  return out;
}

ordered_json DistributionToJson(const Distribution& distribution) {
  ordered_json out;
  if (distribution.is_uniform()) {
    out["kind"] = "uniform";
    return out;
  }
  const auto pmf = distribution.pmf();
  const auto one = std::find(pmf.begin(), pmf.end(), 1.0);
  if (one != pmf.end()) {
    out["kind"] = "point_mass";
    out["record"] = distribution.universe().Format(
        static_cast<RecordId>(one - pmf.begin()));
    return out;
  }
  out["kind"] = "pmf";
  out["probs"] = std::vector<double>(pmf.begin(), pmf.end());
  return out;
}

ordered_json MechanismToJson(const MechanismSpec& spec) {
  ordered_json out;
  out["kind"] = MechanismKindName(spec.kind);
  if (MechanismTakesEpsilon(spec.kind)) out["epsilon"] = spec.epsilon;
  return out;
}

ordered_json AdversaryToJson(const AdversaryKind& kind) {
  ordered_json out;
  out["kind"] = AdversaryTypeName(kind.type);
  if (kind.type == AdversaryType::kEmpiricalBayes) {
    out["samples"] = kind.samples;
    out["seed"] = kind.seed;
  }
  return out;
}

ordered_json LossToJson(const LossSpec& spec) {
  ordered_json out;
  out["kind"] = LossKindName(spec.kind);
  out["eta"] = spec.eta;
  return out;
}

ordered_json GameConfigToJson(const GameConfig& config) {
  const RecordUniverse& universe = config.prior.universe();
  ordered_json out;
  out["variant"] = GameVariantName(config.variant);
  out["universe"] = UniverseToJson(universe);
  out["distribution"] = DistributionToJson(config.prior);
  out["n"] = config.n;
  out["mechanism"] = MechanismToJson(config.mechanism);
  out["adversary"] = AdversaryToJson(config.adversary);
  out["loss"] = LossToJson(config.loss);
  if (config.fixed_context) {
    ordered_json context = ordered_json::array();
    for (RecordId r : *config.fixed_context) context.push_back(universe.Format(r));
    out["fixed_context"] = std::move(context);
  }
  out["enumeration_cap"] = config.enumeration_cap;
  return out;
}

}  // namespace rerolab
