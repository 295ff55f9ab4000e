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

#include "rerolab/taxonomy/registry.h"

#include <utility>

#include "absl/container/flat_hash_set.h"
#include "absl/status/status.h"
#include "absl/strings/str_cat.h"

namespace rerolab {
namespace {

using Values = std::map<Dimension, std::vector<std::string>>;

AttackSpec GameEntry(std::string name, std::optional<std::string> citation,
                absl::string_view dataset_generation,
                absl::string_view dataset_aux,
                std::optional<std::string> records) {
  AttackSpec spec;
  spec.name = std::move(name);
  spec.citation = std::move(citation);
  spec.values = Values{
      {Dimension::kDatasetGeneration, {std::string(dataset_generation)}},
      {Dimension::kPrivacyUnit, {"individual"}},
      {Dimension::kTargetSource, {"drawn"}},
      {Dimension::kAccessToMechanism, {"blackbox"}},
      {Dimension::kPopulationAux, {"description_of_D"}},
      {Dimension::kDatasetAux, {std::string(dataset_aux)}},
      {Dimension::kAttackGoal, {"reconstruction"}},
      {Dimension::kSuccessMetric, {"exact_match_probability"}},
  };
  spec.dataset_aux_records = std::move(records);
  spec.baseline = {{"access_to_mechanism", "none"}};
  return spec;
}

struct Actor {
  absl::string_view group;
  std::vector<std::string> goals;
  absl::string_view dataset_aux;
  std::optional<std::string> records;
};

absl::string_view MetricFor(absl::string_view goal) {
  if (goal == "reconstruction") return "mse";
  if (goal == "attribute_inference") return "exact_match_probability";
  return "isolation_probability";
}

// Every combination of the case study's open choices for one actor.
void AddActor(const Actor& actor, std::vector<AttackSpec>& out) {
  int index = 0;
  for (const char* unit : {"event", "individual"}) {
    for (const char* target : {"chosen", "drawn"}) {
      for (const char* population :
           {"published_statistical_queries", "chosen_statistical_queries"}) {
        for (const std::string& goal : actor.goals) {
          ++index;
          AttackSpec spec;
          spec.name = index == 1 ? std::string(actor.group)
                                 : absl::StrCat(actor.group, "#", index);
          spec.group = std::string(actor.group);
          spec.values = Values{
              {Dimension::kDatasetGeneration, {"drawn"}},
              {Dimension::kPrivacyUnit, {unit}},
              {Dimension::kTargetSource, {target}},
              {Dimension::kAccessToMechanism, {"released_dataset"}},
              {Dimension::kPopulationAux, {population}},
              {Dimension::kDatasetAux, {std::string(actor.dataset_aux)}},
              {Dimension::kAttackGoal, {goal}},
              {Dimension::kSuccessMetric, {std::string(MetricFor(goal))}},
          };
          spec.dataset_aux_records = actor.records;
          spec.baseline = {{"access_to_mechanism", "none"}};
          out.push_back(std::move(spec));
        }
      }
    }
  }
}

AttackSpec Stub(std::string name, std::string citation) {
  AttackSpec spec;
  spec.name = std::move(name);
  spec.citation = std::move(citation);
  spec.stub = true;
  return spec;
}

AttackRegistry MakeBuiltin() {
  std::vector<AttackSpec> entries;
  entries.push_back(GameEntry("rero", "balle2022reconstructing", "chosen",
                         "chosen_subsample", "full"));
  entries.push_back(GameEntry("distrero", std::nullopt, "drawn", "none",
                         std::nullopt));
  AddActor({kIndividualGroup,
            {"singling_out", "attribute_inference", "reconstruction"},
            "none",
            std::nullopt},
           entries);
  AddActor({kHmoGroup, {"reconstruction"}, "chosen_subsample", "full"},
           entries);
  AddActor({kRetailerGroup, {"attribute_inference"}, "chosen_subsample",
            "partial"},
           entries);
  entries.push_back(Stub("intermediate_poison", "Nasr2021AdversaryIL"));
  entries.push_back(Stub("label_inference", "dick2023unified"));
  entries.push_back(Stub("predicate_singling_out", "cohen2020singling"));
  entries.push_back(Stub("confidence_ranked_reconstruction",
                         "Dick2022ConfidenceRankedRO"));
  entries.push_back(Stub("gradient_based", "hayes2023bounding"));
  return *AttackRegistry::Create(std::move(entries));
}

}  // namespace

absl::StatusOr<AttackRegistry> AttackRegistry::Create(
    std::vector<AttackSpec> entries) {
  absl::flat_hash_set<std::string> names;
  for (const AttackSpec& spec : entries) {
    if (!names.insert(spec.name).second) {
      return absl::InvalidArgumentError(
          absl::StrCat("duplicate attack name '", spec.name, "'"));
    }
  }
  return AttackRegistry(std::move(entries));
}

const AttackSpec* AttackRegistry::Find(absl::string_view name) const {
  for (const AttackSpec& spec : entries_) {
    if (spec.name == name) return &spec;
  }
  return nullptr;
}

std::vector<std::string> AttackRegistry::GroupMembers(
    absl::string_view group) const {
  std::vector<std::string> names;
  for (const AttackSpec& spec : entries_) {
    if (spec.group && *spec.group == group) names.push_back(spec.name);
  }
  return names;
}

std::vector<Finding> AttackRegistry::ValidateAll() const {
  std::vector<Finding> findings;
  for (const AttackSpec& spec : entries_) {
    std::vector<Finding> own = Validate(spec);
    findings.insert(findings.end(), own.begin(), own.end());
  }
  return findings;
}

nlohmann::ordered_json AttackRegistry::ToJson() const {
  nlohmann::ordered_json list = nlohmann::ordered_json::array();
  for (const AttackSpec& spec : entries_) list.push_back(rerolab::ToJson(spec));
  nlohmann::ordered_json out;
  out["entries"] = std::move(list);
  return out;
}

absl::StatusOr<AttackRegistry> AttackRegistry::FromJson(
    const nlohmann::json& json) {
  if (!json.is_object() || !json.contains("entries") ||
      !json["entries"].is_array()) {
    return absl::InvalidArgumentError(
        "taxonomy document needs an 'entries' list");
  }
  std::vector<AttackSpec> entries;
  for (const nlohmann::json& item : json["entries"]) {
    absl::StatusOr<AttackSpec> spec = AttackSpecFromJson(item);
    if (!spec.ok()) return spec.status();
    entries.push_back(*std::move(spec));
  }
  return Create(std::move(entries));
}

const AttackRegistry& BuiltinRegistry() {
  static const AttackRegistry* const registry =
      new AttackRegistry(MakeBuiltin());
  return *registry;
}

}  // namespace rerolab
