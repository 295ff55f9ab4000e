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

#include "rerolab/core/distribution.h"

#include <cmath>
#include <utility>

#include "absl/status/status.h"
#include "absl/strings/str_cat.h"

namespace rerolab {

Distribution::Distribution(RecordUniverse universe, std::vector<double> pmf,
                           bool uniform)
    : universe_(std::move(universe)), pmf_(std::move(pmf)), uniform_(uniform) {
  cdf_.resize(pmf_.size());
  double running = 0.0;
  for (std::size_t i = 0; i < pmf_.size(); ++i) {
    running += pmf_[i];
    cdf_[i] = running;
  }
}

Distribution Distribution::Uniform(const RecordUniverse& universe) {
  const double p = 1.0 / static_cast<double>(universe.size());
  return Distribution(universe, std::vector<double>(universe.size(), p), true);
}

absl::StatusOr<Distribution> Distribution::PointMass(
    const RecordUniverse& universe, RecordId record) {
  if (!universe.Contains(record)) {
    return absl::InvalidArgumentError(
        absl::StrCat("point mass on record ", record, " outside universe"));
  }
  std::vector<double> pmf(universe.size(), 0.0);
  pmf[record] = 1.0;
  return Distribution(universe, std::move(pmf), universe.size() == 1);
}

absl::StatusOr<Distribution> Distribution::FromPmf(
    const RecordUniverse& universe, std::vector<double> pmf) {
  if (pmf.size() != universe.size()) {
    return absl::InvalidArgumentError(
        absl::StrCat("pmf has ", pmf.size(), " entries, universe has ",
                     universe.size(), " records"));
  }
  double total = 0.0;
  for (std::size_t i = 0; i < pmf.size(); ++i) {
    if (!(pmf[i] >= 0.0 && pmf[i] <= 1.0)) {
      return absl::InvalidArgumentError(
          absl::StrCat("pmf entry ", i, " = ", pmf[i], " is not in [0, 1]"));
    }
    total += pmf[i];
  }
  if (std::abs(total - 1.0) > kPmfSumTolerance) {
    return absl::InvalidArgumentError(
        absl::StrCat("pmf sums to ", total, ", not 1"));
  }
  bool uniform = true;
  for (double p : pmf) uniform = uniform && p == pmf.front();
  return Distribution(universe, std::move(pmf), uniform);
}

double Distribution::DatasetProbability(const Dataset& dataset) const {
  double p = 1.0;
  for (RecordId r : dataset) p *= pmf_[r];
  return p;
}

RecordId Distribution::Sample(StreamEngine& engine) const {
  return static_cast<RecordId>(SampleFromCdf(engine, cdf_));
}

Dataset SampleDataset(const Distribution& d, int n, StreamEngine& engine) {
  std::vector<RecordId> records(n);
  for (int i = 0; i < n; ++i) records[i] = d.Sample(engine);
  return Dataset(std::move(records));
}

Dataset SampleDataset(const Distribution& d, int n, std::uint64_t seed,
                      std::uint64_t trial) {
  StreamEngine engine = MakeTrialEngine(seed, trial);
  return SampleDataset(d, n, engine);
}

}  // namespace rerolab
