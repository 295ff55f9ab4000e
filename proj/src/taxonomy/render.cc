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

#include "rerolab/taxonomy/render.h"

#include <algorithm>
#include <map>
#include <utility>

#include "absl/container/flat_hash_set.h"
#include "absl/status/status.h"
#include "absl/strings/str_cat.h"
#include "absl/strings/str_format.h"
#include "absl/strings/str_join.h"

namespace rerolab {
namespace {

constexpr int kAxisCount = 9;
constexpr double kLeft = 70.0;
constexpr double kAxisGap = 150.0;
constexpr double kTop = 90.0;
constexpr double kAxisHeight = 300.0;
constexpr double kLegendRow = 16.0;

constexpr absl::string_view kPalette[] = {"#4477AA", "#EE6677", "#228833",
                                          "#CCBB44", "#66CCEE", "#AA3377",
                                          "#BBBBBB"};

const std::map<std::string, std::string>& FixedColors() {
  static const auto* const colors = new std::map<std::string, std::string>{
      {std::string(kIndividualGroup), "#4477AA"},
      {std::string(kHmoGroup), "#228833"},
      {std::string(kRetailerGroup), "#AA3377"},
      {"rero", "#AA4477"},
      {"distrero", "#777777"},
  };
  return *colors;
}

std::string Escape(absl::string_view text) {
  std::string out;
  for (char c : text) {
    switch (c) {
      case '&':
        out += "&amp;";
        break;
      case '<':
        out += "&lt;";
        break;
      case '>':
        out += "&gt;";
        break;
      case '"':
        out += "&quot;";
        break;
      case '\'':
        out += "&apos;";
        break;
      default:
        out += c;
    }
  }
  return out;
}

std::string Num(double v) { return absl::StrFormat("%.1f", v); }

// Tick value of `spec` on axis `axis`.
std::string AxisValue(const AttackSpec& spec, int axis) {
  if (axis < 7) {
    const Dimension d = kAllDimensions[axis];
    std::string value = spec.Value(d);
    if (d == Dimension::kDatasetAux && spec.dataset_aux_records) {
      absl::StrAppend(&value, " (", *spec.dataset_aux_records, ")");
    }
    return value;
  }
  if (axis == 7) {
    std::vector<std::string> parts;
    for (Dimension d : kAllDimensions) {
      const auto it = spec.baseline.find(DimensionName(d));
      if (it != spec.baseline.end()) {
        parts.push_back(absl::StrCat(it->first, "=", it->second));
      }
    }
    return absl::StrJoin(parts, "; ");
  }
  return spec.Value(Dimension::kSuccessMetric);
}

// Ticks of one axis, top to bottom.
std::vector<std::string> AxisTicks(int axis,
                                   const std::vector<const AttackSpec*>& specs) {
  std::vector<std::string> used;
  for (const AttackSpec* spec : specs) used.push_back(AxisValue(*spec, axis));
  std::vector<std::string> ticks;
  const auto add = [&](const std::string& tick) {
    if (std::find(ticks.begin(), ticks.end(), tick) == ticks.end()) {
      ticks.push_back(tick);
    }
  };
  const auto is_used = [&](const std::string& tick) {
    return std::find(used.begin(), used.end(), tick) != used.end();
  };
  if (axis != 7) {
    const Dimension d = axis < 7 ? kAllDimensions[axis]
                                 : Dimension::kSuccessMetric;
    for (absl::string_view option : CanonicalOptions(d)) {
      if (d == Dimension::kDatasetAux) {
        for (absl::string_view records : DatasetAuxRecordOptions()) {
          const std::string qualified =
              absl::StrCat(option, " (", records, ")");
          if (is_used(qualified)) add(qualified);
        }
      }
      add(std::string(option));
    }
  }
  for (const std::string& value : used) add(value);
  return ticks;
}

}  // namespace

std::vector<std::string> AxisNames() {
  std::vector<std::string> names;
  for (int axis = 0; axis < 7; ++axis) {
    names.push_back(DimensionName(kAllDimensions[axis]));
  }
  names.push_back(std::string(kBaselineKey));
  names.push_back(DimensionName(Dimension::kSuccessMetric));
  return names;
}

std::string StrokeColor(const AttackSpec& spec, int fallback_index) {
  const auto& fixed = FixedColors();
  if (spec.group) {
    const auto it = fixed.find(*spec.group);
    if (it != fixed.end()) return it->second;
  }
  const auto it = fixed.find(spec.name);
  if (it != fixed.end()) return it->second;
  constexpr int kPaletteSize = sizeof(kPalette) / sizeof(kPalette[0]);
  return std::string(kPalette[fallback_index % kPaletteSize]);
}

absl::StatusOr<std::string> RenderParallelCoordinates(
    const AttackRegistry& registry, const std::vector<std::string>& selection) {
  std::vector<const AttackSpec*> specs;
  absl::flat_hash_set<std::string> seen;
  for (const std::string& name : selection) {
    const AttackSpec* spec = registry.Find(name);
    if (spec == nullptr) {
      return absl::NotFoundError(absl::StrCat("unknown attack '", name, "'"));
    }
    if (!seen.insert(name).second) {
      return absl::InvalidArgumentError(
          absl::StrCat("attack '", name, "' selected twice"));
    }
    if (spec->stub) {
      return absl::FailedPreconditionError(
          absl::StrCat("attack '", name, "' is a stub and has no values"));
    }
    if (HasErrors(Validate(*spec))) {
      return absl::FailedPreconditionError(
          absl::StrCat("attack '", name, "' does not validate"));
    }
    specs.push_back(spec);
  }

  std::vector<std::string> colors;
  std::vector<std::string> distinct_colors;
  int fallback = 0;
  for (const AttackSpec* spec : specs) {
    const bool fixed = (spec->group && FixedColors().contains(*spec->group)) ||
                       FixedColors().contains(spec->name);
    colors.push_back(StrokeColor(*spec, fixed ? 0 : fallback++));
    if (std::find(distinct_colors.begin(), distinct_colors.end(),
                  colors.back()) == distinct_colors.end()) {
      distinct_colors.push_back(colors.back());
    }
  }

  const std::vector<std::string> names = AxisNames();
  std::vector<std::vector<std::string>> ticks;
  for (int axis = 0; axis < kAxisCount; ++axis) {
    ticks.push_back(AxisTicks(axis, specs));
  }
  const auto axis_x = [](int axis) { return kLeft + axis * kAxisGap; };
  const auto tick_y = [&](int axis, std::size_t j) {
    return kTop + (static_cast<double>(j) + 0.5) * kAxisHeight /
                      static_cast<double>(ticks[axis].size());
  };

  const double width = kLeft + (kAxisCount - 1) * kAxisGap + 200.0;
  const double legend_top = kTop + kAxisHeight + 50.0;
  const double height =
      legend_top + kLegendRow * static_cast<double>(specs.size()) + 20.0;

  std::string svg;
  absl::StrAppend(&svg,
                  "<?xml version=\"1.0\" encoding=\"UTF-8\" "
                  "standalone=\"no\"?>\n",
                  "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" "
                  "width=\"",
                  Num(width), "\" height=\"", Num(height), "\" viewBox=\"0 0 ",
                  Num(width), " ", Num(height),
                  "\" font-family=\"sans-serif\">\n",
                  "<title>Attack taxonomy</title>\n");

  // Role headers over their axes.
  const struct {
    const char* label;
    int first;
    int last;
  } roles[] = {{"Crafter", 0, 2}, {"Attacker", 3, 6}, {"Evaluator", 7, 8}};
  absl::StrAppend(&svg, "<g id=\"roles\" font-size=\"14\" font-weight=\"bold\" "
                        "text-anchor=\"middle\">\n");
  for (const auto& role : roles) {
    absl::StrAppend(&svg, "  <text x=\"",
                    Num((axis_x(role.first) + axis_x(role.last)) / 2.0),
                    "\" y=\"", Num(kTop - 55.0), "\">", role.label,
                    "</text>\n");
  }
  absl::StrAppend(&svg, "</g>\n");

  absl::StrAppend(&svg, "<g id=\"axes\" font-size=\"10\">\n");
  for (int axis = 0; axis < kAxisCount; ++axis) {
    const double x = axis_x(axis);
    absl::StrAppend(&svg, "  <g class=\"axis\" data-dimension=\"", names[axis],
                    "\">\n");
    absl::StrAppend(&svg, "    <line x1=\"", Num(x), "\" y1=\"", Num(kTop),
                    "\" x2=\"", Num(x), "\" y2=\"", Num(kTop + kAxisHeight),
                    "\" stroke=\"#333333\" stroke-width=\"2\"/>\n");
    absl::StrAppend(&svg, "    <text x=\"", Num(x), "\" y=\"", Num(kTop - 20.0),
                    "\" font-size=\"12\" text-anchor=\"middle\">",
                    Escape(names[axis]), "</text>\n");
    for (std::size_t j = 0; j < ticks[axis].size(); ++j) {
      const double y = tick_y(axis, j);
      absl::StrAppend(&svg, "    <circle cx=\"", Num(x), "\" cy=\"", Num(y),
                      "\" r=\"3\" fill=\"#333333\"/>\n");
      absl::StrAppend(&svg, "    <text x=\"", Num(x + 6.0), "\" y=\"",
                      Num(y - 4.0), "\">", Escape(ticks[axis][j]),
                      "</text>\n");
    }
    absl::StrAppend(&svg, "  </g>\n");
  }
  absl::StrAppend(&svg, "</g>\n");

  absl::StrAppend(&svg, "<g id=\"attacks\" fill=\"none\" stroke-width=\"2\" "
                        "stroke-opacity=\"0.8\">\n");
  for (std::size_t e = 0; e < specs.size(); ++e) {
    // Same-colored lines share an offset so that distinct actors stay
    // visible where their paths coincide.
    const auto color_index = static_cast<double>(
        std::find(distinct_colors.begin(), distinct_colors.end(), colors[e]) -
        distinct_colors.begin());
    const double offset =
        (color_index - (static_cast<double>(distinct_colors.size()) - 1) / 2) *
        3.0;
    std::vector<std::string> points;
    for (int axis = 0; axis < kAxisCount; ++axis) {
      const std::string value = AxisValue(*specs[e], axis);
      const auto j = static_cast<std::size_t>(
          std::find(ticks[axis].begin(), ticks[axis].end(), value) -
          ticks[axis].begin());
      points.push_back(
          absl::StrCat(Num(axis_x(axis)), ",", Num(tick_y(axis, j) + offset)));
    }
    absl::StrAppend(&svg, "  <polyline class=\"attack\" data-name=\"",
                    Escape(specs[e]->name), "\" stroke=\"", colors[e],
                    "\" points=\"", absl::StrJoin(points, " "), "\"/>\n");
  }
  absl::StrAppend(&svg, "</g>\n");

  absl::StrAppend(&svg, "<g id=\"legend\" font-size=\"11\">\n");
  for (std::size_t e = 0; e < specs.size(); ++e) {
    const double y = legend_top + kLegendRow * static_cast<double>(e);
    absl::StrAppend(&svg, "  <line x1=\"", Num(kLeft), "\" y1=\"", Num(y),
                    "\" x2=\"", Num(kLeft + 24.0), "\" y2=\"", Num(y),
                    "\" stroke=\"", colors[e], "\" stroke-width=\"3\"/>\n");
    absl::StrAppend(&svg, "  <text x=\"", Num(kLeft + 32.0), "\" y=\"",
                    Num(y + 4.0), "\">", Escape(specs[e]->name), "</text>\n");
  }
  absl::StrAppend(&svg, "</g>\n</svg>\n");
  return svg;
}

}  // namespace rerolab
