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

#include "rerolab/bounds/baseline.h"

#include <algorithm>
#include <cmath>
#include <vector>

#include "absl/status/status.h"
#include "absl/strings/str_cat.h"
#include "rerolab/adversaries/adversary.h"
#include "rerolab/base/status_macros.h"

namespace rerolab {

absl::StatusOr<KappaResult> ComputeKappa(const Distribution& d,
                                         const LossSpec& loss) {
  return ComputeKappaBar(d, loss, 1);
}

absl::StatusOr<KappaResult> ComputeKappaBar(const Distribution& d,
                                            const LossSpec& loss, int n) {
  if (n < 1) {
    return absl::InvalidArgumentError(
        absl::StrCat("dataset size must be >= 1, got ", n));
  }
  REROLAB_ASSIGN_OR_RETURN(std::vector<double> p,
                           GuessSuccessProbabilities(d, loss));
  if (n > 1) {
    for (double& v : p) v = 1.0 - std::pow(1.0 - v, n);
  }
  const std::size_t best = ArgmaxSmallestIndex(p);
  return KappaResult{*std::max_element(p.begin(), p.end()),
                     static_cast<RecordId>(best)};
}

absl::StatusOr<KappaResult> KappaBarByEnumeration(const Distribution& d,
                                                  const LossSpec& loss, int n,
                                                  std::uint64_t cap) {
  const std::uint64_t size = d.universe().size();
  REROLAB_ASSIGN_OR_RETURN(
      DatasetEnumeration datasets,
      DatasetEnumeration::Create(d, n, DatasetOrdering::kMultiset, cap));
  if (SaturatingMul(datasets.count(), size) > cap) {
    return absl::ResourceExhaustedError(absl::StrCat(
        "instance too large for exact mode: ", datasets.count(),
        " datasets x ", size, " guesses exceed the enumeration cap of ", cap));
  }
  REROLAB_ASSIGN_OR_RETURN(LossFunction fn,
                           LossFunction::Create(loss, d.universe()));
  std::vector<double> hit(size, 0.0);
  for (const WeightedDataset& wd : datasets) {
    if (wd.probability == 0.0) continue;
    for (std::uint64_t z = 0; z < size; ++z) {
      for (RecordId x : wd.dataset) {
        if (fn.Success(x, static_cast<RecordId>(z))) {
          hit[z] += wd.probability;
          break;
        }
      }
    }
  }
  const std::size_t best = ArgmaxSmallestIndex(hit);
  return KappaResult{*std::max_element(hit.begin(), hit.end()),
                     static_cast<RecordId>(best)};
}

absl::StatusOr<BaselineReport> ComputeBaseline(const Distribution& d,
                                               const LossSpec& loss, int n) {
  REROLAB_ASSIGN_OR_RETURN(KappaResult kappa, ComputeKappa(d, loss));
  REROLAB_ASSIGN_OR_RETURN(KappaResult kappa_bar, ComputeKappaBar(d, loss, n));
  return BaselineReport{kappa.value, kappa_bar.value, kappa.argmax, n};
}

}  // namespace rerolab
