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

#ifndef REROLAB_TAXONOMY_RENDER_H_
#define REROLAB_TAXONOMY_RENDER_H_

#include <string>
#include <vector>

#include "absl/status/statusor.h"
#include "rerolab/taxonomy/registry.h"

namespace rerolab {

// Axis labels in table order: the seven attack dimensions, the baseline and
// the success metric.
std::vector<std::string> AxisNames();

// Stroke color of an entry: a fixed color per case-study group or known
// game, otherwise a colorblind-safe palette cycled in selection order.
std::string StrokeColor(const AttackSpec& spec, int fallback_index);

// Standalone SVG 1.1 parallel-coordinates figure. One vertical axis per
// dimension, options strongest first (top to bottom) with extension values
// appended, one polyline per selected entry, and a legend. Output bytes
// depend only on the registry and the selection. Fails on unknown or
// repeated names and on entries that do not validate (stubs included).
absl::StatusOr<std::string> RenderParallelCoordinates(
    const AttackRegistry& registry, const std::vector<std::string>& selection);

}  // namespace rerolab

#endif  // REROLAB_TAXONOMY_RENDER_H_
