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

#include "rerolab/adversaries/latent_model.h"

#include <utility>

#include "absl/status/status.h"
#include "absl/strings/str_cat.h"
#include "rerolab/base/status_macros.h"

namespace rerolab {
namespace {

constexpr std::uint64_t kMaxHitTableSide = 2048;

}  // namespace

std::string GameVariantName(GameVariant variant) {
  switch (variant) {
    case GameVariant::kReRo:
      return "rero";
    case GameVariant::kAvgDistReRo:
      return "avg_dist_rero";
    case GameVariant::kBcDistReRo:
      return "bc_dist_rero";
  }
  return "";
}

absl::StatusOr<GameVariant> ParseGameVariant(absl::string_view name) {
  if (name == "rero") return GameVariant::kReRo;
  if (name == "avg_dist_rero") return GameVariant::kAvgDistReRo;
  if (name == "bc_dist_rero") return GameVariant::kBcDistReRo;
  return absl::InvalidArgumentError(
      absl::StrCat("unknown game variant '", name, "'"));
}

SuccessScorer::SuccessScorer(LossFunction loss, GameVariant variant,
                             std::uint64_t size)
    : loss_(std::move(loss)), variant_(variant), size_(size) {
  if (size_ <= kMaxHitTableSide) {
    table_.resize(size_ * size_);
    for (RecordId a = 0; a < size_; ++a) {
      for (RecordId b = 0; b < size_; ++b) {
        table_[a * size_ + b] = loss_.Success(a, b) ? 1 : 0;
      }
    }
  }
}

double SuccessScorer::Score(const Dataset& input, RecordId guess) const {
  switch (variant_) {
    case GameVariant::kReRo:
      return Hit(input[input.n() - 1], guess) ? 1.0 : 0.0;
    case GameVariant::kAvgDistReRo: {
      int hits = 0;
      for (RecordId x : input) hits += Hit(x, guess);
      return static_cast<double>(hits) / input.n();
    }
    case GameVariant::kBcDistReRo:
      for (RecordId x : input) {
        if (Hit(x, guess)) return 1.0;
      }
      return 0.0;
  }
  return 0.0;
}

void SuccessScorer::Scores(const Dataset& input,
                           std::vector<double>& out) const {
  out.assign(size_, 0.0);
  switch (variant_) {
    case GameVariant::kReRo: {
      const RecordId target = input[input.n() - 1];
      for (RecordId z = 0; z < size_; ++z) out[z] = Hit(target, z) ? 1.0 : 0.0;
      return;
    }
    case GameVariant::kAvgDistReRo: {
      const double share = 1.0 / input.n();
      for (RecordId x : input) {
        for (RecordId z = 0; z < size_; ++z) {
          if (Hit(x, z)) out[z] += share;
        }
      }
      return;
    }
    case GameVariant::kBcDistReRo:
      for (RecordId x : input) {
        for (RecordId z = 0; z < size_; ++z) {
          if (Hit(x, z)) out[z] = 1.0;
        }
      }
      return;
  }
}

absl::StatusOr<LatentModel> LatentModel::Create(
    const Distribution& prior, int n, GameVariant variant,
    const std::optional<Dataset>& known_records, bool permutation_invariant,
    std::uint64_t cap) {
  std::vector<Latent> latents;
  if (variant == GameVariant::kReRo) {
    if (!known_records || known_records->n() != n - 1) {
      return absl::InvalidArgumentError(
          absl::StrCat("rero needs exactly ", n - 1, " known records"));
    }
    const std::uint64_t size = prior.universe().size();
    if (size > cap) {
      return absl::ResourceExhaustedError(absl::StrCat(
          "instance too large for exact mode: ", size,
          " targets exceed the enumeration cap of ", cap));
    }
    latents.reserve(size);
    for (RecordId z = 0; z < size; ++z) {
      latents.push_back({known_records->With(z), prior.Probability(z)});
    }
    return LatentModel(variant, std::move(latents));
  }
  if (known_records) {
    return absl::InvalidArgumentError(
        "distributional games take no known records");
  }
  REROLAB_ASSIGN_OR_RETURN(
      DatasetEnumeration datasets,
      DatasetEnumeration::Create(prior, n,
                                 permutation_invariant
                                     ? DatasetOrdering::kMultiset
                                     : DatasetOrdering::kOrdered,
                                 cap));
  latents.reserve(datasets.count());
  for (const WeightedDataset& wd : datasets) {
    latents.push_back({wd.dataset, wd.probability});
  }
  return LatentModel(variant, std::move(latents));
}

Dataset SampleLatentInput(const Distribution& prior, int n,
                          GameVariant variant,
                          const std::optional<Dataset>& known_records,
                          StreamEngine& engine) {
  if (variant == GameVariant::kReRo) {
    return known_records->With(prior.Sample(engine));
  }
  return SampleDataset(prior, n, engine);
}

}  // namespace rerolab
