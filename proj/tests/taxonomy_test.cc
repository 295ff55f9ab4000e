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

#include <algorithm>
#include <functional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <boost/property_tree/ptree.hpp>
#include <boost/property_tree/xml_parser.hpp>

#include "absl/strings/str_cat.h"
#include "absl/strings/str_split.h"
#include "gmock/gmock.h"
#include "gtest/gtest.h"
#include "json.hpp"
#include "rerolab/taxonomy/attack_spec.h"
#include "rerolab/taxonomy/registry.h"
#include "rerolab/taxonomy/render.h"
#include "test_util.h"

namespace rerolab {
namespace {

using ::testing::ElementsAre;
using ::testing::ElementsAreArray;
using ::testing::IsEmpty;
using ::testing::SizeIs;

AttackSpec DistReRoSpec() {
  AttackSpec spec;
  spec.name = "my_distrero";
  spec.values = {
      {Dimension::kDatasetGeneration, {"drawn"}},
      {Dimension::kPrivacyUnit, {"individual"}},
      {Dimension::kTargetSource, {"drawn"}},
      {Dimension::kAccessToMechanism, {"blackbox"}},
      {Dimension::kPopulationAux, {"description_of_D"}},
      {Dimension::kDatasetAux, {"none"}},
      {Dimension::kAttackGoal, {"reconstruction"}},
      {Dimension::kSuccessMetric, {"exact_match_probability"}},
  };
  spec.baseline = {{"access_to_mechanism", "none"}};
  return spec;
}

std::vector<Finding> Errors(const std::vector<Finding>& findings) {
  std::vector<Finding> out;
  std::copy_if(findings.begin(), findings.end(), std::back_inserter(out),
               [](const Finding& f) { return f.severity == Severity::kError; });
  return out;
}

std::vector<std::string> Fields(const std::vector<Finding>& findings) {
  std::vector<std::string> out;
  for (const Finding& f : findings) out.push_back(f.field);
  return out;
}

TEST(ValidateTest, CanonicalSpecHasNoFindings) {
  EXPECT_THAT(Validate(DistReRoSpec()), IsEmpty());
}

TEST(ValidateTest, MissingGoalIsAnError) {
  AttackSpec spec = DistReRoSpec();
  spec.values.erase(Dimension::kAttackGoal);
  const std::vector<Finding> findings = Validate(spec);
  EXPECT_TRUE(HasErrors(findings));
  EXPECT_THAT(Fields(Errors(findings)), ElementsAre("attack_goal"));
}

TEST(ValidateTest, MultipleValuesAreAnError) {
  AttackSpec spec = DistReRoSpec();
  spec.values[Dimension::kTargetSource] = {"chosen", "drawn"};
  EXPECT_THAT(Fields(Errors(Validate(spec))), ElementsAre("target_source"));
}

TEST(ValidateTest, ExtensionOptionIsAWarning) {
  AttackSpec spec = DistReRoSpec();
  spec.values[Dimension::kAccessToMechanism] = {"released_dataset"};
  const std::vector<Finding> findings = Validate(spec);
  EXPECT_FALSE(HasErrors(findings));
  ASSERT_THAT(findings, SizeIs(1));
  EXPECT_EQ(findings[0].severity, Severity::kWarning);
  EXPECT_EQ(findings[0].field, "access_to_mechanism");
  EXPECT_THAT(findings[0].message, ::testing::HasSubstr("extension option"));
}

TEST(ValidateTest, OptionsAreScopedByDimension) {
  // "none" is an access option, not a population aux option.
  AttackSpec spec = DistReRoSpec();
  spec.values[Dimension::kPopulationAux] = {"none"};
  const std::vector<Finding> findings = Validate(spec);
  ASSERT_THAT(findings, SizeIs(1));
  EXPECT_EQ(findings[0].severity, Severity::kWarning);
}

TEST(ValidateTest, BaselineRules) {
  AttackSpec spec = DistReRoSpec();
  spec.baseline.clear();
  EXPECT_THAT(Fields(Errors(Validate(spec))), ElementsAre("baseline"));
  spec.baseline = {{"colour", "none"}};
  EXPECT_THAT(Errors(Validate(spec)), SizeIs(2));
  spec.baseline = {{"access_to_mechanism", "blackbox"}};
  EXPECT_THAT(Fields(Errors(Validate(spec))), ElementsAre("baseline"));
  spec.baseline = {{"access_to_mechanism", "blackbox"}, {"dataset_aux", "chosen_subsample"}};
  EXPECT_FALSE(HasErrors(Validate(spec)));
}

TEST(ValidateTest, RecordsQualifierRules) {
  AttackSpec spec = DistReRoSpec();
  spec.dataset_aux_records = "full";
  EXPECT_THAT(Fields(Errors(Validate(spec))), ElementsAre("dataset_aux_records"));
  spec.values[Dimension::kDatasetAux] = {"chosen_subsample"};
  EXPECT_FALSE(HasErrors(Validate(spec)));
  spec.dataset_aux_records = "most";
  EXPECT_TRUE(HasErrors(Validate(spec)));
}

TEST(ValidateTest, StubRules) {
  AttackSpec stub{.name = "poison", .citation = "someone2021", .stub = true};
  const std::vector<Finding> findings = Validate(stub);
  EXPECT_FALSE(HasErrors(findings));
  EXPECT_THAT(findings, SizeIs(1));
  stub.citation.reset();
  EXPECT_TRUE(HasErrors(Validate(stub)));
  stub.citation = "someone2021";
  stub.values[Dimension::kAttackGoal] = {"reconstruction"};
  EXPECT_TRUE(HasErrors(Validate(stub)));
}

TEST(OptionsTest, StrongestFirstAndDimensionNamesRoundTrip) {
  const auto access = CanonicalOptions(Dimension::kAccessToMechanism);
  EXPECT_THAT(std::vector<std::string>(access.begin(), access.end()),
              ElementsAre("adaptive", "whitebox", "blackbox", "query", "none"));
  const auto unit = CanonicalOptions(Dimension::kPrivacyUnit);
  EXPECT_THAT(std::vector<std::string>(unit.begin(), unit.end()),
              ElementsAre("group", "individual", "event"));
  for (Dimension d : kAllDimensions) {
    EXPECT_EQ(ParseDimension(DimensionName(d)).value(), d);
  }
  EXPECT_FALSE(ParseDimension("colour").ok());
}

TEST(OptionsTest, OptionSetsWithinEachDimensionAreDistinct) {
  for (Dimension d : kAllDimensions) {
    const auto options = CanonicalOptions(d);
    const std::set<absl::string_view> unique(options.begin(), options.end());
    EXPECT_EQ(unique.size(), options.size()) << DimensionName(d);
  }
}

TEST(RegistryTest, BuiltinValidatesWithoutErrors) {
  const AttackRegistry& registry = BuiltinRegistry();
  EXPECT_FALSE(HasErrors(registry.ValidateAll()));
  int full = 0;
  int stubs = 0;
  for (const AttackSpec& spec : registry.entries()) {
    (spec.stub ? stubs : full) += 1;
  }
  EXPECT_GE(full, 5);
  EXPECT_EQ(stubs, 5);
}

TEST(RegistryTest, BuiltinEntries) {
  const AttackRegistry& registry = BuiltinRegistry();
  const AttackSpec* distrero = registry.Find("distrero");
  ASSERT_NE(distrero, nullptr);
  EXPECT_EQ(distrero->Value(Dimension::kDatasetAux), "none");
  EXPECT_EQ(distrero->Value(Dimension::kDatasetGeneration), "drawn");
  EXPECT_EQ(distrero->Value(Dimension::kAccessToMechanism), "blackbox");

  const AttackSpec* rero = registry.Find("rero");
  ASSERT_NE(rero, nullptr);
  EXPECT_EQ(rero->Value(Dimension::kDatasetGeneration), "chosen");
  EXPECT_EQ(rero->Value(Dimension::kDatasetAux), "chosen_subsample");

  const AttackSpec* hmo = registry.Find("hmo");
  ASSERT_NE(hmo, nullptr);
  EXPECT_EQ(hmo->Value(Dimension::kDatasetAux), "chosen_subsample");
  EXPECT_EQ(hmo->dataset_aux_records, "full");
  EXPECT_EQ(hmo->Value(Dimension::kAccessToMechanism), "released_dataset");

  const AttackSpec* retailer = registry.Find("retailer");
  ASSERT_NE(retailer, nullptr);
  EXPECT_EQ(retailer->Value(Dimension::kAttackGoal), "attribute_inference");

  EXPECT_EQ(registry.Find("nonexistent"), nullptr);
}

TEST(RegistryTest, CaseStudyGroupsShareATag) {
  const AttackRegistry& registry = BuiltinRegistry();
  for (absl::string_view group : {kIndividualGroup, kHmoGroup, kRetailerGroup}) {
    const std::vector<std::string> members = registry.GroupMembers(group);
    ASSERT_FALSE(members.empty());
    EXPECT_EQ(members.front(), group);
    for (const std::string& name : members) {
      EXPECT_EQ(registry.Find(name)->group, std::string(group));
    }
  }
}

TEST(RegistryTest, RejectsDuplicateNames) {
  EXPECT_FALSE(AttackRegistry::Create({DistReRoSpec(), DistReRoSpec()}).ok());
}

TEST(SerializationTest, EveryEntryRoundTripsByteStable) {
  for (const AttackSpec& spec : BuiltinRegistry().entries()) {
    const std::string bytes = Serialize(spec);
    ASSERT_OK_AND_ASSIGN(AttackSpec parsed, ParseAttackSpec(bytes));
    EXPECT_EQ(parsed, spec) << spec.name;
    EXPECT_EQ(Serialize(parsed), bytes) << spec.name;
  }
}

TEST(SerializationTest, RegistryRoundTrip) {
  const std::string bytes = BuiltinRegistry().ToJson().dump(2);
  ASSERT_OK_AND_ASSIGN(AttackRegistry parsed,
                       AttackRegistry::FromJson(nlohmann::json::parse(bytes)));
  EXPECT_EQ(parsed.ToJson().dump(2), bytes);
}

TEST(SerializationTest, FieldOrderIsCanonical) {
  const std::string text = Serialize(DistReRoSpec());
  const nlohmann::ordered_json parsed = nlohmann::ordered_json::parse(text);
  std::vector<std::string> keys;
  for (const auto& [key, value] : parsed.items()) keys.push_back(key);
  EXPECT_THAT(keys, ElementsAre("name", "dataset_generation", "privacy_unit",
                                "target_source", "access_to_mechanism",
                                "population_aux", "dataset_aux", "attack_goal",
                                "baseline", "success_metric"));
}

TEST(SerializationTest, RejectsUnknownKeysAndBadTypes) {
  EXPECT_FALSE(ParseAttackSpec(R"({"name": "x", "colour": "red"})").ok());
  EXPECT_FALSE(ParseAttackSpec(R"({"name": 3})").ok());
  EXPECT_FALSE(ParseAttackSpec("not json").ok());
}

TEST(SerializationTest, MultipleValuesSurviveParsing) {
  AttackSpec spec = DistReRoSpec();
  spec.values[Dimension::kTargetSource] = {"chosen", "drawn"};
  ASSERT_OK_AND_ASSIGN(AttackSpec parsed, ParseAttackSpec(Serialize(spec)));
  EXPECT_EQ(parsed, spec);
}

// Element-level view of a rendered SVG, from a real XML parser.
struct SvgSummary {
  std::vector<std::string> polyline_names;
  std::set<std::string> strokes;
  std::vector<std::string> axes;
  std::vector<int> points_per_line;
};

SvgSummary ParseSvg(const std::string& svg) {
  namespace pt = boost::property_tree;
  pt::ptree tree;
  std::istringstream in(svg);
  pt::read_xml(in, tree);
  SvgSummary summary;
  std::function<void(const pt::ptree&)> visit = [&](const pt::ptree& node) {
    for (const auto& [tag, child] : node) {
      if (tag == "polyline") {
        summary.polyline_names.push_back(
            child.get<std::string>("<xmlattr>.data-name"));
        summary.strokes.insert(child.get<std::string>("<xmlattr>.stroke"));
        const std::string points = child.get<std::string>("<xmlattr>.points");
        summary.points_per_line.push_back(static_cast<int>(
            std::vector<std::string>(absl::StrSplit(points, ' ')).size()));
      } else if (tag == "g" &&
                 child.get<std::string>("<xmlattr>.class", "") == "axis") {
        summary.axes.push_back(child.get<std::string>("<xmlattr>.data-dimension"));
      }
      visit(child);
    }
  };
  visit(tree);
  return summary;
}

const std::vector<std::string> kTableOrder = {
    "dataset_generation", "privacy_unit",  "target_source",
    "access_to_mechanism", "population_aux", "dataset_aux",
    "attack_goal",        "baseline",      "success_metric"};

TEST(RenderTest, SingleEntry) {
  ASSERT_OK_AND_ASSIGN(std::string svg,
                       RenderParallelCoordinates(BuiltinRegistry(), {"distrero"}));
  const SvgSummary summary = ParseSvg(svg);
  EXPECT_THAT(summary.polyline_names, ElementsAre("distrero"));
  EXPECT_THAT(summary.axes, ElementsAreArray(kTableOrder));
  EXPECT_THAT(summary.points_per_line, ElementsAre(9));
}

TEST(RenderTest, CaseStudyActorsGetDistinctColors) {
  ASSERT_OK_AND_ASSIGN(
      std::string svg,
      RenderParallelCoordinates(BuiltinRegistry(),
                                {"curious_individual", "hmo", "retailer"}));
  const SvgSummary summary = ParseSvg(svg);
  EXPECT_THAT(summary.polyline_names,
              ElementsAre("curious_individual", "hmo", "retailer"));
  EXPECT_THAT(summary.strokes, SizeIs(3));
}

TEST(RenderTest, FullCaseStudyScenarios) {
  const AttackRegistry& registry = BuiltinRegistry();
  std::vector<std::string> selection;
  for (absl::string_view group : {kIndividualGroup, kHmoGroup, kRetailerGroup}) {
    for (const std::string& name : registry.GroupMembers(group)) {
      selection.push_back(name);
    }
  }
  ASSERT_OK_AND_ASSIGN(std::string svg,
                       RenderParallelCoordinates(registry, selection));
  const SvgSummary summary = ParseSvg(svg);
  EXPECT_EQ(summary.polyline_names, selection);
  EXPECT_THAT(summary.strokes, SizeIs(3));
  EXPECT_THAT(summary.axes, ElementsAreArray(kTableOrder));
}

TEST(RenderTest, EmptySelectionHasAxesOnly) {
  ASSERT_OK_AND_ASSIGN(std::string svg,
                       RenderParallelCoordinates(BuiltinRegistry(), {}));
  const SvgSummary summary = ParseSvg(svg);
  EXPECT_THAT(summary.polyline_names, IsEmpty());
  EXPECT_THAT(summary.axes, ElementsAreArray(kTableOrder));
}

TEST(RenderTest, OutputIsDeterministic) {
  const std::vector<std::string> selection = {"rero", "distrero", "hmo"};
  EXPECT_EQ(RenderParallelCoordinates(BuiltinRegistry(), selection).value(),
            RenderParallelCoordinates(BuiltinRegistry(), selection).value());
}

TEST(RenderTest, TicksListStrongestOptionFirst) {
  ASSERT_OK_AND_ASSIGN(std::string svg,
                       RenderParallelCoordinates(BuiltinRegistry(), {}));
  const std::size_t begin = svg.find("data-dimension=\"access_to_mechanism\"");
  const std::size_t end = svg.find("</g>", begin);
  ASSERT_NE(begin, std::string::npos);
  const std::string axis = svg.substr(begin, end - begin);
  std::size_t previous = 0;
  for (absl::string_view option : CanonicalOptions(Dimension::kAccessToMechanism)) {
    const std::size_t at = axis.find(absl::StrCat(">", option, "<"));
    ASSERT_NE(at, std::string::npos) << option;
    EXPECT_GT(at, previous) << option;
    previous = at;
  }
}

TEST(RenderTest, SelectionErrors) {
  const AttackRegistry& registry = BuiltinRegistry();
  EXPECT_EQ(RenderParallelCoordinates(registry, {"nope"}).status().code(),
            absl::StatusCode::kNotFound);
  EXPECT_EQ(RenderParallelCoordinates(registry, {"rero", "rero"}).status().code(),
            absl::StatusCode::kInvalidArgument);
  EXPECT_EQ(
      RenderParallelCoordinates(registry, {"intermediate_poison"}).status().code(),
      absl::StatusCode::kFailedPrecondition);
}

TEST(RenderTest, AxisNamesFollowTableOrder) {
  EXPECT_EQ(AxisNames(), kTableOrder);
}

}  // namespace
}  // namespace rerolab
