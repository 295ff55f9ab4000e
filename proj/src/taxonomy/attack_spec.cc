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

#include "rerolab/taxonomy/attack_spec.h"

#include <algorithm>
#include <utility>

#include "absl/status/status.h"
#include "absl/strings/str_cat.h"
#include "absl/strings/str_join.h"

namespace rerolab {
namespace {

using nlohmann::json;
using nlohmann::ordered_json;

constexpr absl::string_view kDatasetGenerationOptions[] = {"chosen", "drawn"};
constexpr absl::string_view kPrivacyUnitOptions[] = {"group", "individual",
                                                     "event"};
constexpr absl::string_view kTargetSourceOptions[] = {"chosen", "drawn"};
constexpr absl::string_view kAccessOptions[] = {"adaptive", "whitebox",
                                                "blackbox", "query", "none"};
constexpr absl::string_view kPopulationAuxOptions[] = {
    "description_of_D", "samples_from_D", "description_of_approx_D", "schema"};
constexpr absl::string_view kDatasetAuxOptions[] = {
    "chosen_subsample", "random_subsample", "none"};
constexpr absl::string_view kAttackGoalOptions[] = {
    "membership_inference", "attribute_inference", "singling_out",
    "reconstruction"};
constexpr absl::string_view kSuccessMetricOptions[] = {
    "mse", "tpr_at_fpr", "exact_match_probability"};
constexpr absl::string_view kRecordOptions[] = {"full", "partial"};

constexpr absl::string_view kKnownKeys[] = {
    "name",           "citation",            "group",
    "stub",           "dataset_generation",  "privacy_unit",
    "target_source",  "access_to_mechanism", "population_aux",
    "dataset_aux",    "dataset_aux_records", "attack_goal",
    "baseline",       "success_metric",
};

Finding Error(const AttackSpec& spec, std::string field, std::string message) {
  return {Severity::kError, spec.name, std::move(field), std::move(message)};
}

Finding Warning(const AttackSpec& spec, std::string field,
                std::string message) {
  return {Severity::kWarning, spec.name, std::move(field), std::move(message)};
}

absl::StatusOr<std::string> StringField(const json& object,
                                           absl::string_view key) {
  const auto it = object.find(std::string(key));
  if (!it->is_string()) {
    return absl::InvalidArgumentError(
        absl::StrCat("'", key, "' must be a string"));
  }
  return it->get<std::string>();
}

// Baseline keys in dimension order, then unknown keys alphabetically.
std::vector<std::string> OrderedBaselineKeys(
    const std::map<std::string, std::string>& baseline) {
  std::vector<std::string> keys;
  for (Dimension d : kAllDimensions) {
    if (baseline.contains(DimensionName(d))) keys.push_back(DimensionName(d));
  }
  for (const auto& [key, value] : baseline) {
    if (!ParseDimension(key).ok()) keys.push_back(key);
  }
  return keys;
}

}  // namespace

std::string DimensionName(Dimension dimension) {
  switch (dimension) {
    case Dimension::kDatasetGeneration:
      return "dataset_generation";
    case Dimension::kPrivacyUnit:
      return "privacy_unit";
    case Dimension::kTargetSource:
      return "target_source";
    case Dimension::kAccessToMechanism:
      return "access_to_mechanism";
    case Dimension::kPopulationAux:
      return "population_aux";
    case Dimension::kDatasetAux:
      return "dataset_aux";
    case Dimension::kAttackGoal:
      return "attack_goal";
    case Dimension::kSuccessMetric:
      return "success_metric";
  }
  return "unknown";
}

absl::StatusOr<Dimension> ParseDimension(absl::string_view name) {
  for (Dimension d : kAllDimensions) {
    if (DimensionName(d) == name) return d;
  }
  return absl::InvalidArgumentError(
      absl::StrCat("unknown dimension '", name, "'"));
}

std::span<const absl::string_view> CanonicalOptions(Dimension dimension) {
  switch (dimension) {
    case Dimension::kDatasetGeneration:
      return kDatasetGenerationOptions;
    case Dimension::kPrivacyUnit:
      return kPrivacyUnitOptions;
    case Dimension::kTargetSource:
      return kTargetSourceOptions;
    case Dimension::kAccessToMechanism:
      return kAccessOptions;
    case Dimension::kPopulationAux:
      return kPopulationAuxOptions;
    case Dimension::kDatasetAux:
      return kDatasetAuxOptions;
    case Dimension::kAttackGoal:
      return kAttackGoalOptions;
    case Dimension::kSuccessMetric:
      return kSuccessMetricOptions;
  }
  return {};
}

bool IsCanonicalOption(Dimension dimension, absl::string_view option) {
  const auto options = CanonicalOptions(dimension);
  return std::find(options.begin(), options.end(), option) != options.end();
}

std::span<const absl::string_view> DatasetAuxRecordOptions() {
  return kRecordOptions;
}

std::string AttackSpec::Value(Dimension dimension) const {
  const auto it = values.find(dimension);
  if (it == values.end() || it->second.empty()) return "";
  return it->second.front();
}

std::string SeverityName(Severity severity) {
  return severity == Severity::kError ? "error" : "warning";
}

std::vector<Finding> Validate(const AttackSpec& spec) {
  std::vector<Finding> findings;
  if (spec.name.empty()) findings.push_back(Error(spec, "name", "empty name"));
  if (spec.stub) {
    if (!spec.citation || spec.citation->empty()) {
      findings.push_back(Error(spec, "citation", "stub entry needs a citation"));
    }
    if (!spec.values.empty() || !spec.baseline.empty()) {
      findings.push_back(
          Error(spec, "stub", "stub entry must not carry dimension values"));
    } else {
      findings.push_back(Warning(spec, "stub",
                                 "stub entry; dimension values not encoded"));
    }
    return findings;
  }

  for (Dimension d : kAllDimensions) {
    const std::string field = DimensionName(d);
    const auto it = spec.values.find(d);
    if (it == spec.values.end() || it->second.empty()) {
      findings.push_back(Error(spec, field, "missing value"));
      continue;
    }
    if (it->second.size() > 1) {
      findings.push_back(Error(
          spec, field,
          absl::StrCat(it->second.size(), " values (",
                       absl::StrJoin(it->second, ", "),
                       "); exactly one is required")));
      continue;
    }
    const std::string& value = it->second.front();
    if (value.empty()) {
      findings.push_back(Error(spec, field, "empty value"));
    } else if (!IsCanonicalOption(d, value)) {
      findings.push_back(Warning(
          spec, field,
          d == Dimension::kSuccessMetric
              ? absl::StrCat("unrecognized metric '", value, "'")
              : absl::StrCat("extension option '", value, "'")));
    }
  }

  if (spec.dataset_aux_records) {
    const auto records = DatasetAuxRecordOptions();
    if (std::find(records.begin(), records.end(), *spec.dataset_aux_records) ==
        records.end()) {
      findings.push_back(Error(
          spec, std::string(kDatasetAuxRecordsKey),
          absl::StrCat("records qualifier must be full or partial, got '",
                       *spec.dataset_aux_records, "'")));
    } else if (spec.Value(Dimension::kDatasetAux) == "none") {
      findings.push_back(Error(spec, std::string(kDatasetAuxRecordsKey),
                               "records qualifier without a dataset subsample"));
    }
  }

  const std::string baseline_field(kBaselineKey);
  if (spec.baseline.empty()) {
    findings.push_back(Error(spec, baseline_field, "missing baseline"));
  } else {
    bool differs = false;
    for (const std::string& key : OrderedBaselineKeys(spec.baseline)) {
      const std::string& value = spec.baseline.at(key);
      const absl::StatusOr<Dimension> d = ParseDimension(key);
      if (!d.ok()) {
        findings.push_back(Error(
            spec, baseline_field,
            absl::StrCat("override of unknown dimension '", key, "'")));
        continue;
      }
      if (value.empty()) {
        findings.push_back(Error(spec, baseline_field,
                                 absl::StrCat("empty override of ", key)));
        continue;
      }
      if (!IsCanonicalOption(*d, value) && *d != Dimension::kSuccessMetric) {
        findings.push_back(Warning(
            spec, baseline_field,
            absl::StrCat("extension option '", value, "' for ", key)));
      }
      if (value != spec.Value(*d)) differs = true;
    }
    if (!differs) {
      findings.push_back(Error(
          spec, baseline_field,
          "baseline does not differ from the attack in any dimension"));
    }
  }
  return findings;
}

bool HasErrors(std::span<const Finding> findings) {
  return std::any_of(findings.begin(), findings.end(), [](const Finding& f) {
    return f.severity == Severity::kError;
  });
}

ordered_json ToJson(const AttackSpec& spec) {
  ordered_json out;
  out["name"] = spec.name;
  if (spec.citation) out["citation"] = *spec.citation;
  if (spec.group) out["group"] = *spec.group;
  if (spec.stub) out["stub"] = true;
  const auto put = [&](Dimension d) {
    const auto it = spec.values.find(d);
    if (it == spec.values.end() || it->second.empty()) return;
    if (it->second.size() == 1) {
      out[DimensionName(d)] = it->second.front();
    } else {
      out[DimensionName(d)] = it->second;
    }
  };
  for (Dimension d : kAllDimensions) {
    if (d == Dimension::kSuccessMetric) continue;
    put(d);
    if (d == Dimension::kDatasetAux && spec.dataset_aux_records) {
      out[std::string(kDatasetAuxRecordsKey)] = *spec.dataset_aux_records;
    }
  }
  if (!spec.baseline.empty()) {
    ordered_json baseline = ordered_json::object();
    for (const std::string& key : OrderedBaselineKeys(spec.baseline)) {
      baseline[key] = spec.baseline.at(key);
    }
    out[std::string(kBaselineKey)] = std::move(baseline);
  }
  put(Dimension::kSuccessMetric);
  return out;
}

absl::StatusOr<AttackSpec> AttackSpecFromJson(const json& object) {
  if (!object.is_object()) {
    return absl::InvalidArgumentError("attack spec must be a JSON object");
  }
  for (const auto& [key, value] : object.items()) {
    if (std::find(std::begin(kKnownKeys), std::end(kKnownKeys), key) ==
        std::end(kKnownKeys)) {
      return absl::InvalidArgumentError(
          absl::StrCat("unknown attack spec field '", key, "'"));
    }
  }
  AttackSpec spec;
  if (!object.contains("name")) {
    return absl::InvalidArgumentError("attack spec needs a name");
  }
  absl::StatusOr<std::string> name = StringField(object, "name");
  if (!name.ok()) return name.status();
  spec.name = *std::move(name);
  for (absl::string_view key : {"citation", "group"}) {
    if (!object.contains(std::string(key))) continue;
    absl::StatusOr<std::string> value = StringField(object, key);
    if (!value.ok()) return value.status();
    (key == "citation" ? spec.citation : spec.group) = *std::move(value);
  }
  if (object.contains("stub")) {
    if (!object["stub"].is_boolean()) {
      return absl::InvalidArgumentError("'stub' must be a boolean");
    }
    spec.stub = object["stub"].get<bool>();
  }
  for (Dimension d : kAllDimensions) {
    const std::string key = DimensionName(d);
    if (!object.contains(key)) continue;
    const json& value = object[key];
    std::vector<std::string> values;
    if (value.is_string()) {
      values.push_back(value.get<std::string>());
    } else if (value.is_array()) {
      for (const json& item : value) {
        if (!item.is_string()) {
          return absl::InvalidArgumentError(
              absl::StrCat("'", key, "' entries must be strings"));
        }
        values.push_back(item.get<std::string>());
      }
    } else {
      return absl::InvalidArgumentError(
          absl::StrCat("'", key, "' must be a string or a list of strings"));
    }
    if (!values.empty()) spec.values[d] = std::move(values);
  }
  if (object.contains(std::string(kDatasetAuxRecordsKey))) {
    absl::StatusOr<std::string> records =
        StringField(object, kDatasetAuxRecordsKey);
    if (!records.ok()) return records.status();
    spec.dataset_aux_records = *std::move(records);
  }
  if (object.contains(std::string(kBaselineKey))) {
    const json& baseline = object[std::string(kBaselineKey)];
    if (!baseline.is_object()) {
      return absl::InvalidArgumentError("'baseline' must be an object");
    }
    for (const auto& [key, value] : baseline.items()) {
      if (!value.is_string()) {
        return absl::InvalidArgumentError(
            absl::StrCat("baseline override '", key, "' must be a string"));
      }
      spec.baseline[key] = value.get<std::string>();
    }
  }
  return spec;
}

std::string Serialize(const AttackSpec& spec) { return ToJson(spec).dump(2); }

absl::StatusOr<AttackSpec> ParseAttackSpec(absl::string_view text) {
  json parsed = json::parse(text.begin(), text.end(), nullptr, false);
  if (parsed.is_discarded()) {
    return absl::InvalidArgumentError("attack spec is not valid JSON");
  }
  return AttackSpecFromJson(parsed);
}

}  // namespace rerolab
