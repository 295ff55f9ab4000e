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

#ifndef REROLAB_GAMES_EXACT_H_
#define REROLAB_GAMES_EXACT_H_

#include <vector>

#include "absl/status/statusor.h"
#include "rerolab/games/game.h"

namespace rerolab {

struct OutputBreakdown {
  OutputSymbol symbol = 0;
  double probability = 0.0;    // Pr[theta = symbol]
  double success_given = 0.0;  // Pr[success | theta = symbol]
  RecordId guess = 0;
  bool fallback = false;
};

struct ExactResult {
  double gamma = 0.0;
  // Outputs with positive probability, ascending by symbol. gamma equals
  // sum(probability * success_given) up to rounding.
  std::vector<OutputBreakdown> outputs;
};

// Exact success probability of the configured adversary.
//
// Sums over every latent mechanism input (weighted by the prior) and every
// output (weighted by the mechanism law). The average variant's uniform
// index is folded in analytically through the per-dataset hit fraction.
// exact_bayes is evaluated as the posterior argmax per output, computed from
// the same joint table. Fails with ResourceExhausted when
// (#latent inputs x alphabet) or (alphabet x universe size) exceeds the
// game's enumeration cap.
absl::StatusOr<ExactResult> ExactGamma(const Game& game);
absl::StatusOr<ExactResult> ExactGamma(const GameConfig& config);

struct ReRoMaximum {
  double gamma = 0.0;
  Dataset worst_context;  // an X_{-1} attaining the maximum
};

// max over X_{-1} in X^{n-1} of the exact informed-game success with the
// configured adversary. `config.variant` and `config.fixed_context` are
// ignored. Contexts are enumerated up to reordering when the mechanism is
// permutation invariant.
absl::StatusOr<ReRoMaximum> MaxReRoGamma(const GameConfig& config);

}  // namespace rerolab

#endif  // REROLAB_GAMES_EXACT_H_
