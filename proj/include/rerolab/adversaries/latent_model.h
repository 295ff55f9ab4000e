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

#ifndef REROLAB_ADVERSARIES_LATENT_MODEL_H_
#define REROLAB_ADVERSARIES_LATENT_MODEL_H_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "absl/status/statusor.h"
#include "absl/strings/string_view.h"
#include "rerolab/core/dataset.h"
#include "rerolab/core/distribution.h"
#include "rerolab/core/enumeration.h"
#include "rerolab/core/loss.h"
#include "rerolab/core/seeding.h"

namespace rerolab {

enum class GameVariant { kReRo, kAvgDistReRo, kBcDistReRo };

std::string GameVariantName(GameVariant variant);
absl::StatusOr<GameVariant> ParseGameVariant(absl::string_view name);

// Success score of a guess against the dataset the mechanism saw.
//
//   rero:          1[loss(x_n, guess) <= eta]; the target sits last.
//   avg_dist_rero: (1/n) * #{i : loss(x_i, guess) <= eta}, i.e. the success
//                  probability averaged over a uniform index.
//   bc_dist_rero:  1[min_i loss(x_i, guess) <= eta].
class SuccessScorer {
 public:
  SuccessScorer(LossFunction loss, GameVariant variant, std::uint64_t size);

  GameVariant variant() const { return variant_; }
  const LossFunction& loss() const { return loss_; }

  bool Hit(RecordId target, RecordId guess) const {
    return table_.empty() ? loss_.Success(target, guess)
                          : table_[target * size_ + guess] != 0;
  }

  double Score(const Dataset& input, RecordId guess) const;

  // out[z] = Score(input, z) for every record z.
  void Scores(const Dataset& input, std::vector<double>& out) const;

 private:
  LossFunction loss_;
  GameVariant variant_;
  std::uint64_t size_;
  std::vector<char> table_;  // size x size hit table, when small enough
};

// The adversary's unknowns, i.e. every mechanism input it must reason over,
// with prior weights.
//
// ReRo: inputs are known_records + (z) for every z, weighted by prior(z).
// DistReRo variants: inputs are all datasets in X^n under the product prior,
// collapsed to multisets when `permutation_invariant` (the mechanism law and
// every score then depend only on the multiset).
struct Latent {
  Dataset input;
  double weight = 0.0;
};

class LatentModel {
 public:
  static absl::StatusOr<LatentModel> Create(
      const Distribution& prior, int n, GameVariant variant,
      const std::optional<Dataset>& known_records, bool permutation_invariant,
      std::uint64_t cap = kDefaultEnumerationCap);

  GameVariant variant() const { return variant_; }
  const std::vector<Latent>& latents() const { return latents_; }
  std::size_t size() const { return latents_.size(); }

 private:
  LatentModel(GameVariant variant, std::vector<Latent> latents)
      : variant_(variant), latents_(std::move(latents)) {}

  GameVariant variant_;
  std::vector<Latent> latents_;
};

// One prior draw of a mechanism input, as in the games themselves.
Dataset SampleLatentInput(const Distribution& prior, int n,
                          GameVariant variant,
                          const std::optional<Dataset>& known_records,
                          StreamEngine& engine);

}  // namespace rerolab

#endif  // REROLAB_ADVERSARIES_LATENT_MODEL_H_
