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

#ifndef REROLAB_TAXONOMY_REGISTRY_H_
#define REROLAB_TAXONOMY_REGISTRY_H_

#include <string>
#include <vector>

#include "absl/status/statusor.h"
#include "absl/strings/string_view.h"
#include "json.hpp"
#include "rerolab/taxonomy/attack_spec.h"

namespace rerolab {

class AttackRegistry {
 public:
  // Fails on duplicate names.
  static absl::StatusOr<AttackRegistry> Create(std::vector<AttackSpec> entries);

  const std::vector<AttackSpec>& entries() const { return entries_; }

  // nullptr when absent.
  const AttackSpec* Find(absl::string_view name) const;

  // Names of the entries tagged with `group`, in registry order.
  std::vector<std::string> GroupMembers(absl::string_view group) const;

  // Findings of every entry, in registry order.
  std::vector<Finding> ValidateAll() const;

  // {"entries": [...]} with canonical entries.
  nlohmann::ordered_json ToJson() const;
  static absl::StatusOr<AttackRegistry> FromJson(const nlohmann::json& json);

 private:
  explicit AttackRegistry(std::vector<AttackSpec> entries)
      : entries_(std::move(entries)) {}

  std::vector<AttackSpec> entries_;
};

// Group tags of the three case-study actors.
inline constexpr absl::string_view kIndividualGroup = "curious_individual";
inline constexpr absl::string_view kHmoGroup = "hmo";
inline constexpr absl::string_view kRetailerGroup = "retailer";

// The two reconstruction games ("rero", "distrero"), every path of the three
// case-study actors (first path named after the group, the rest
// "<group>#2", "<group>#3", ...), and citation stubs for published attacks.
const AttackRegistry& BuiltinRegistry();

}  // namespace rerolab

#endif  // REROLAB_TAXONOMY_REGISTRY_H_
