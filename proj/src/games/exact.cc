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

#include "rerolab/games/exact.h"

#include <span>
#include <utility>

#include "absl/status/status.h"
#include "absl/strings/str_cat.h"
#include "rerolab/base/status_macros.h"

namespace rerolab {

absl::StatusOr<ExactResult> ExactGamma(const Game& game) {
  const GameConfig& config = game.config();
  const Mechanism& mechanism = game.mechanism();
  const std::uint64_t cap = config.enumeration_cap;
  const std::uint64_t size = config.prior.universe().size();
  const std::uint64_t alphabet = mechanism.AlphabetSize();

  REROLAB_ASSIGN_OR_RETURN(
      LatentModel latents,
      LatentModel::Create(config.prior, config.n, config.variant,
                          config.fixed_context,
                          mechanism.PermutationInvariant(), cap));
  if (SaturatingMul(latents.size(), alphabet) > cap ||
      SaturatingMul(alphabet, size) > cap) {
    return absl::ResourceExhaustedError(absl::StrCat(
        "instance too large for exact mode: ", latents.size(),
        " latent inputs, ", alphabet, " outputs and ", size,
        " records exceed the enumeration cap of ", cap));
  }

  SuccessScorer scorer(game.loss(), config.variant, size);

  // joint[theta * size + z] = Pr[theta, guess z succeeds].
  std::vector<double> output_mass(alphabet, 0.0);
  std::vector<double> joint(alphabet * size, 0.0);
  std::vector<double> pmf;
  std::vector<double> scores;
  for (const Latent& latent : latents.latents()) {
    if (latent.weight == 0.0) continue;
    mechanism.FillOutputPmf(latent.input, pmf);
    scorer.Scores(latent.input, scores);
    for (std::uint64_t theta = 0; theta < alphabet; ++theta) {
      if (pmf[theta] == 0.0) continue;
      const double mass = latent.weight * pmf[theta];
      output_mass[theta] += mass;
      double* row = &joint[theta * size];
      for (std::uint64_t z = 0; z < size; ++z) row[z] += mass * scores[z];
    }
  }

  // Outputs of zero probability never contribute, so the oblivious fallback
  // guess is irrelevant here.
  const bool bayes = config.adversary.type == AdversaryType::kExactBayes;

  ExactResult result;
  for (std::uint64_t theta = 0; theta < alphabet; ++theta) {
    if (!(output_mass[theta] > 0.0)) continue;
    const std::span<const double> row(&joint[theta * size], size);
    OutputBreakdown out;
    out.symbol = theta;
    out.probability = output_mass[theta];
    if (bayes) {
      out.guess = static_cast<RecordId>(ArgmaxSmallestIndex(row));
    } else {
      const Guess guess = game.adversary().GuessFor(theta);
      out.guess = guess.record;
      out.fallback = guess.fallback;
    }
    out.success_given = row[out.guess] / output_mass[theta];
    result.gamma += row[out.guess];
    result.outputs.push_back(out);
  }
  return result;
}

absl::StatusOr<ExactResult> ExactGamma(const GameConfig& config) {
  REROLAB_ASSIGN_OR_RETURN(Game game, Game::Create(config));
  return ExactGamma(game);
}

absl::StatusOr<ReRoMaximum> MaxReRoGamma(const GameConfig& config) {
  GameConfig rero = config;
  rero.variant = GameVariant::kReRo;
  rero.fixed_context = Dataset();
  if (config.n == 1) {
    REROLAB_ASSIGN_OR_RETURN(ExactResult exact, ExactGamma(rero));
    return ReRoMaximum{exact.gamma, Dataset()};
  }
  REROLAB_ASSIGN_OR_RETURN(
      std::shared_ptr<const Mechanism> mechanism,
      CreateMechanism(config.mechanism, config.prior.universe(), config.n));
  REROLAB_ASSIGN_OR_RETURN(
      DatasetEnumeration contexts,
      DatasetEnumeration::Create(Distribution::Uniform(config.prior.universe()),
                                 config.n - 1,
                                 mechanism->PermutationInvariant()
                                     ? DatasetOrdering::kMultiset
                                     : DatasetOrdering::kOrdered,
                                 config.enumeration_cap));
  ReRoMaximum best;
  bool first = true;
  for (const WeightedDataset& context : contexts) {
    rero.fixed_context = context.dataset;
    REROLAB_ASSIGN_OR_RETURN(ExactResult exact, ExactGamma(rero));
    if (first || exact.gamma > best.gamma) {
      best = {exact.gamma, context.dataset};
      first = false;
    }
  }
  return best;
}

}  // namespace rerolab
