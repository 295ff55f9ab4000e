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

#ifndef REROLAB_MECHANISMS_DP_METER_H_
#define REROLAB_MECHANISMS_DP_METER_H_

#include <cstdint>

#include "absl/status/statusor.h"
#include "rerolab/core/enumeration.h"
#include "rerolab/mechanisms/mechanism.h"

namespace rerolab {

// Tight pure-DP parameter of `mechanism` under replace-one neighbors:
//
//   max over datasets x ~ x' (one position replaced) and outputs t of
//   |ln Pr[M(x) = t] - ln Pr[M(x') = t]|,
//
// ignoring outputs impossible under both and returning +infinity when an
// output is possible under exactly one. Datasets are enumerated up to
// multiset equivalence when the mechanism is permutation invariant. Fails
// with ResourceExhausted when (#datasets x alphabet) exceeds `cap`.
absl::StatusOr<double> MeasureEpsilon(
    const Mechanism& mechanism, std::uint64_t cap = kDefaultEnumerationCap);

absl::StatusOr<double> MeasureEpsilon(
    const MechanismSpec& spec, const RecordUniverse& universe, int n,
    std::uint64_t cap = kDefaultEnumerationCap);

}  // namespace rerolab

#endif  // REROLAB_MECHANISMS_DP_METER_H_
