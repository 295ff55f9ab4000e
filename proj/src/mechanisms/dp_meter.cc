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

#include "rerolab/mechanisms/dp_meter.h"

#include <cmath>
#include <limits>
#include <set>
#include <utility>
#include <vector>

#include "absl/container/flat_hash_map.h"
#include "absl/status/status.h"
#include "absl/strings/str_cat.h"
#include "rerolab/base/status_macros.h"

namespace rerolab {

absl::StatusOr<double> MeasureEpsilon(const Mechanism& mechanism,
                                      std::uint64_t cap) {
  const RecordUniverse& universe = mechanism.universe();
  const std::uint64_t size = universe.size();
  const DatasetOrdering ordering = mechanism.PermutationInvariant()
                                       ? DatasetOrdering::kMultiset
                                       : DatasetOrdering::kOrdered;
  REROLAB_ASSIGN_OR_RETURN(
      DatasetEnumeration datasets,
      DatasetEnumeration::Create(Distribution::Uniform(universe),
                                 mechanism.n(), ordering, cap));
  const std::uint64_t alphabet = mechanism.AlphabetSize();
  if (SaturatingMul(datasets.count(), alphabet) > cap) {
    return absl::ResourceExhaustedError(absl::StrCat(
        "instance too large for exact mode: ", datasets.count(),
        " datasets x ", alphabet, " outputs exceed the enumeration cap of ",
        cap));
  }

  std::vector<Dataset> latents;
  std::vector<double> pmfs;
  pmfs.reserve(datasets.count() * alphabet);
  absl::flat_hash_map<std::uint64_t, std::size_t> index_of;
  std::vector<double> pmf;
  for (const WeightedDataset& wd : datasets) {
    index_of[EncodeDataset(wd.dataset, size)] = latents.size();
    latents.push_back(wd.dataset);
    mechanism.FillOutputPmf(wd.dataset, pmf);
    pmfs.insert(pmfs.end(), pmf.begin(), pmf.end());
  }

  double max_ratio = 1.0;
  std::set<std::pair<std::size_t, std::size_t>> compared;
  for (std::size_t a = 0; a < latents.size(); ++a) {
    const Dataset& x = latents[a];
    for (int i = 0; i < x.n(); ++i) {
      for (RecordId r = 0; r < size; ++r) {
        if (r == x[i]) continue;
        Dataset neighbor = x.Replaced(i, r);
        if (ordering == DatasetOrdering::kMultiset) neighbor = neighbor.Sorted();
        const std::size_t b = index_of.at(EncodeDataset(neighbor, size));
        // The relation is symmetric, so one direction per pair suffices.
        if (b < a || !compared.emplace(a, b).second) continue;
        const double* p = &pmfs[a * alphabet];
        const double* q = &pmfs[b * alphabet];
        for (std::uint64_t t = 0; t < alphabet; ++t) {
          if (p[t] == q[t]) continue;
          if (p[t] == 0.0 || q[t] == 0.0) {
            return std::numeric_limits<double>::infinity();
          }
          const double ratio = p[t] > q[t] ? p[t] / q[t] : q[t] / p[t];
          if (ratio > max_ratio) max_ratio = ratio;
        }
      }
    }
  }
  return std::log(max_ratio);
}

absl::StatusOr<double> MeasureEpsilon(const MechanismSpec& spec,
                                      const RecordUniverse& universe, int n,
                                      std::uint64_t cap) {
  REROLAB_ASSIGN_OR_RETURN(std::shared_ptr<const Mechanism> mechanism,
                           CreateMechanism(spec, universe, n));
  return MeasureEpsilon(*mechanism, cap);
}

}  // namespace rerolab
