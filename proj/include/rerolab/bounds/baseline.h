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

#ifndef REROLAB_BOUNDS_BASELINE_H_
#define REROLAB_BOUNDS_BASELINE_H_

#include <cstdint>

#include "absl/status/statusor.h"
#include "rerolab/core/distribution.h"
#include "rerolab/core/enumeration.h"
#include "rerolab/core/loss.h"

namespace rerolab {

struct KappaResult {
  double value = 0.0;
  RecordId argmax = 0;  // smallest index attaining the maximum
};

struct BaselineReport {
  double kappa = 0.0;
  double kappa_bar = 0.0;
  RecordId argmax_record = 0;
  int n = 1;
};

// sup_z Pr_{x ~ d}[loss(x, z) <= eta].
absl::StatusOr<KappaResult> ComputeKappa(const Distribution& d,
                                         const LossSpec& loss);

// sup_z Pr_{X ~ d^n}[min_{x in X} loss(x, z) <= eta], by the closed form
// 1 - (1 - p(z))^n for i.i.d. records.
absl::StatusOr<KappaResult> ComputeKappaBar(const Distribution& d,
                                            const LossSpec& loss, int n);

// Same quantity by summing over every dataset (up to reordering).
absl::StatusOr<KappaResult> KappaBarByEnumeration(
    const Distribution& d, const LossSpec& loss, int n,
    std::uint64_t cap = kDefaultEnumerationCap);

absl::StatusOr<BaselineReport> ComputeBaseline(const Distribution& d,
                                               const LossSpec& loss, int n);

}  // namespace rerolab

#endif  // REROLAB_BOUNDS_BASELINE_H_
