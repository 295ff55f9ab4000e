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

#ifndef REROLAB_GAMES_GAME_H_
#define REROLAB_GAMES_GAME_H_

#include <cstdint>
#include <memory>
#include <optional>

#include "absl/status/statusor.h"
#include "rerolab/adversaries/adversary.h"
#include "rerolab/adversaries/latent_model.h"
#include "rerolab/core/dataset.h"
#include "rerolab/core/distribution.h"
#include "rerolab/core/enumeration.h"
#include "rerolab/core/loss.h"
#include "rerolab/mechanisms/mechanism.h"

namespace rerolab {

struct GameConfig {
  GameVariant variant = GameVariant::kAvgDistReRo;
  Distribution prior;
  int n = 1;
  MechanismSpec mechanism;
  AdversaryKind adversary;
  LossSpec loss;
  // The n-1 records the informed adversary holds; required iff rero.
  std::optional<Dataset> fixed_context;
  std::uint64_t enumeration_cap = kDefaultEnumerationCap;
};

// A validated, ready-to-play GameConfig: mechanism, loss and adversary are
// built once and shared by every trial.
class Game {
 public:
  static absl::StatusOr<Game> Create(const GameConfig& config);

  const GameConfig& config() const { return config_; }
  const Mechanism& mechanism() const { return *mechanism_; }
  std::shared_ptr<const Mechanism> mechanism_ptr() const { return mechanism_; }
  const Adversary& adversary() const { return *adversary_; }
  const LossFunction& loss() const { return loss_; }
  AdversaryContext context() const;

 private:
  Game(GameConfig config, std::shared_ptr<const Mechanism> mechanism,
       LossFunction loss, std::shared_ptr<const Adversary> adversary)
      : config_(std::move(config)),
        mechanism_(std::move(mechanism)),
        loss_(std::move(loss)),
        adversary_(std::move(adversary)) {}

  GameConfig config_;
  std::shared_ptr<const Mechanism> mechanism_;
  LossFunction loss_;
  std::shared_ptr<const Adversary> adversary_;
};

struct TrialOutcome {
  double loss = 0.0;
  bool success = false;
  RecordId guess = 0;
  OutputSymbol output = 0;
};

// Informed game: z ~ prior, theta ~ M(context + (z)) with the target last,
// guess = A(theta), scored as loss(z, guess).
absl::StatusOr<TrialOutcome> RunReRoTrial(const Game& game, std::uint64_t seed,
                                          std::uint64_t trial);

// Distributional game: X ~ prior^n, theta ~ M(X), guess = A(theta). The
// average variant scores against x_i for i ~ Uniform[n]; the best-case
// variant against the closest record.
absl::StatusOr<TrialOutcome> RunDistReRoTrial(const Game& game,
                                              std::uint64_t seed,
                                              std::uint64_t trial);

// Dispatches on the configured variant.
TrialOutcome RunTrial(const Game& game, std::uint64_t seed,
                      std::uint64_t trial);

}  // namespace rerolab

#endif  // REROLAB_GAMES_GAME_H_
