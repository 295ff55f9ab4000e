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

#include "rerolab/games/game.h"

#include <algorithm>
#include <utility>

#include "absl/status/status.h"
#include "absl/strings/str_cat.h"
#include "rerolab/base/status_macros.h"
#include "rerolab/core/seeding.h"

namespace rerolab {

absl::StatusOr<Game> Game::Create(const GameConfig& config) {
  if (config.n < 1) {
    return absl::InvalidArgumentError(
        absl::StrCat("dataset size must be >= 1, got ", config.n));
  }
  const bool rero = config.variant == GameVariant::kReRo;
  if (rero && !config.fixed_context) {
    return absl::InvalidArgumentError(
        "rero games need fixed_context (the n-1 known records)");
  }
  if (!rero && config.fixed_context) {
    return absl::InvalidArgumentError(
        "fixed_context is only allowed for rero games");
  }
  REROLAB_ASSIGN_OR_RETURN(
      std::shared_ptr<const Mechanism> mechanism,
      CreateMechanism(config.mechanism, config.prior.universe(), config.n));
  REROLAB_ASSIGN_OR_RETURN(
      LossFunction loss,
      LossFunction::Create(config.loss, config.prior.universe()));
  AdversaryContext context{config.variant,      config.n,
                           config.fixed_context, config.prior,
                           mechanism,            config.loss,
                           config.enumeration_cap};
  REROLAB_ASSIGN_OR_RETURN(std::shared_ptr<const Adversary> adversary,
                           CreateAdversary(config.adversary, context));
  return Game(config, std::move(mechanism), std::move(loss),
              std::move(adversary));
}

AdversaryContext Game::context() const {
  return AdversaryContext{config_.variant,       config_.n,
                          config_.fixed_context, config_.prior,
                          mechanism_,            config_.loss,
                          config_.enumeration_cap};
}

absl::StatusOr<TrialOutcome> RunReRoTrial(const Game& game, std::uint64_t seed,
                                          std::uint64_t trial) {
  if (game.config().variant != GameVariant::kReRo) {
    return absl::FailedPreconditionError("not a rero game");
  }
  return RunTrial(game, seed, trial);
}

absl::StatusOr<TrialOutcome> RunDistReRoTrial(const Game& game,
                                              std::uint64_t seed,
                                              std::uint64_t trial) {
  if (game.config().variant == GameVariant::kReRo) {
    return absl::FailedPreconditionError("not a distributional game");
  }
  return RunTrial(game, seed, trial);
}

TrialOutcome RunTrial(const Game& game, std::uint64_t seed,
                      std::uint64_t trial) {
  const GameConfig& config = game.config();
  StreamEngine engine = MakeTrialEngine(seed, trial);
  TrialOutcome outcome;
  if (config.variant == GameVariant::kReRo) {
    const RecordId target = config.prior.Sample(engine);
    const Dataset input = config.fixed_context->With(target);
    outcome.output = game.mechanism().Sample(input, engine);
    outcome.guess = game.adversary().GuessFor(outcome.output).record;
    outcome.loss = game.loss()(target, outcome.guess);
  } else {
    const Dataset input = SampleDataset(config.prior, config.n, engine);
    outcome.output = game.mechanism().Sample(input, engine);
    outcome.guess = game.adversary().GuessFor(outcome.output).record;
    if (config.variant == GameVariant::kAvgDistReRo) {
      const std::uint64_t i = UniformIndex(engine, config.n);
      outcome.loss = game.loss()(input[i], outcome.guess);
    } else {
      outcome.loss = game.loss()(input[0], outcome.guess);
      for (RecordId x : input) {
        outcome.loss = std::min(outcome.loss, game.loss()(x, outcome.guess));
      }
    }
  }
  outcome.success = outcome.loss <= game.loss().eta();
  return outcome;
}

}  // namespace rerolab
