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

#ifndef REROLAB_GAMES_ESTIMATE_H_
#define REROLAB_GAMES_ESTIMATE_H_

#include <cstdint>
#include <utility>

#include "absl/status/statusor.h"
#include "rerolab/games/game.h"

namespace rerolab {

inline constexpr double kDefaultConfidence = 0.99;

struct Interval {
  double low = 0.0;
  double high = 1.0;

  bool Contains(double x) const { return low <= x && x <= high; }
};

// Exact (Clopper-Pearson) two-sided binomial interval at `confidence`.
// Requires 0 <= successes <= trials, trials >= 1, confidence in (0, 1).
absl::StatusOr<Interval> ClopperPearson(std::uint64_t successes,
                                        std::uint64_t trials,
                                        double confidence);

struct EstimationResult {
  double gamma_hat = 0.0;
  std::uint64_t successes = 0;
  std::uint64_t trials = 0;
  double confidence = kDefaultConfidence;
  double ci_low = 0.0;
  double ci_high = 1.0;
  std::uint64_t seed = 0;

  friend bool operator==(const EstimationResult&,
                         const EstimationResult&) = default;
};

// Mean success over trials 0..trials-1. Trials are split into contiguous
// blocks across `threads` workers; the result is bit-identical for any
// thread count because each trial owns its random stream and successes are
// summed as integers.
absl::StatusOr<EstimationResult> EstimateGamma(
    const Game& game, std::uint64_t trials, std::uint64_t seed,
    int threads = 1, double confidence = kDefaultConfidence);

}  // namespace rerolab

#endif  // REROLAB_GAMES_ESTIMATE_H_
