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

#ifndef REROLAB_CORE_DISTRIBUTION_H_
#define REROLAB_CORE_DISTRIBUTION_H_

#include <cstdint>
#include <span>
#include <vector>

#include "absl/status/statusor.h"
#include "rerolab/core/dataset.h"
#include "rerolab/core/seeding.h"
#include "rerolab/core/universe.h"

namespace rerolab {

// Entries of a pmf must sum to one within this tolerance.
inline constexpr double kPmfSumTolerance = 1e-9;

// A probability mass function over a RecordUniverse. Immutable.
class Distribution {
 public:
  static Distribution Uniform(const RecordUniverse& universe);
  static absl::StatusOr<Distribution> PointMass(const RecordUniverse& universe,
                                                RecordId record);
  // Fails unless every entry is in [0, 1], the length matches the universe,
  // and the entries sum to 1 within kPmfSumTolerance.
  static absl::StatusOr<Distribution> FromPmf(const RecordUniverse& universe,
                                              std::vector<double> pmf);

  const RecordUniverse& universe() const { return universe_; }
  std::span<const double> pmf() const { return pmf_; }
  double Probability(RecordId record) const { return pmf_[record]; }
  bool is_uniform() const { return uniform_; }

  // Product-measure probability of an ordered dataset.
  double DatasetProbability(const Dataset& dataset) const;

  RecordId Sample(StreamEngine& engine) const;

 private:
  Distribution(RecordUniverse universe, std::vector<double> pmf, bool uniform);

  RecordUniverse universe_;
  std::vector<double> pmf_;
  std::vector<double> cdf_;
  bool uniform_ = false;
};

// n i.i.d. draws from `d`, a pure function of (d, n, seed, trial).
Dataset SampleDataset(const Distribution& d, int n, std::uint64_t seed,
                      std::uint64_t trial);

// Same draw from an engine the caller already derived.
Dataset SampleDataset(const Distribution& d, int n, StreamEngine& engine);

}  // namespace rerolab

#endif  // REROLAB_CORE_DISTRIBUTION_H_
