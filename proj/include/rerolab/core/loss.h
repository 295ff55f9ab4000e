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

#ifndef REROLAB_CORE_LOSS_H_
#define REROLAB_CORE_LOSS_H_

#include <string>
#include <utility>
#include <vector>

#include "absl/status/statusor.h"
#include "absl/strings/string_view.h"
#include "rerolab/core/distribution.h"
#include "rerolab/core/universe.h"

namespace rerolab {

enum class LossKind { kExactMatch, kHamming, kAbsolute };

std::string LossKindName(LossKind kind);
absl::StatusOr<LossKind> ParseLossKind(absl::string_view name);

// Reconstruction error function plus success threshold: a guess succeeds
// when loss(target, guess) <= eta.
struct LossSpec {
  LossKind kind = LossKind::kExactMatch;
  double eta = 0.0;

  friend bool operator==(const LossSpec&, const LossSpec&) = default;
};

// A LossSpec bound to a universe whose kind it supports.
//
// exact_match is 0 on equal records and 1 otherwise (so eta = 0 means exact
// reconstruction). hamming counts differing coordinates and needs a bitstring
// or int_vector universe. absolute is |a - b| on a one-dimensional int_vector.
class LossFunction {
 public:
  static absl::StatusOr<LossFunction> Create(const LossSpec& spec,
                                             const RecordUniverse& universe);

  const LossSpec& spec() const { return spec_; }
  double eta() const { return spec_.eta; }

  double operator()(RecordId a, RecordId b) const;
  bool Success(RecordId target, RecordId guess) const {
    return (*this)(target, guess) <= spec_.eta;
  }

 private:
  LossFunction(LossSpec spec, RecordUniverse universe)
      : spec_(spec), universe_(std::move(universe)) {}

  LossSpec spec_;
  RecordUniverse universe_;
};

// Checked single evaluation; errors when the kind does not fit the universe
// or a record lies outside it.
absl::StatusOr<double> Loss(const LossSpec& spec,
                            const RecordUniverse& universe, RecordId a,
                            RecordId b);

// Largest universe for which per-guess success probabilities under a loss
// other than exact match are computed; those need one loss evaluation per
// (record, guess) pair.
inline constexpr std::uint64_t kGuessPairCap = 1'000'000'000;

// p(z) = Pr_{x ~ d}[loss(x, z) <= eta] for every guess z.
absl::StatusOr<std::vector<double>> GuessSuccessProbabilities(
    const Distribution& d, const LossSpec& loss);

}  // namespace rerolab

#endif  // REROLAB_CORE_LOSS_H_
