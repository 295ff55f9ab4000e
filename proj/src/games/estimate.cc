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

#include "rerolab/games/estimate.h"

#include <algorithm>
#include <numeric>
#include <thread>
#include <vector>

#include <boost/math/distributions/beta.hpp>

#include "absl/status/status.h"
#include "absl/strings/str_cat.h"
#include "rerolab/base/status_macros.h"

namespace rerolab {

absl::StatusOr<Interval> ClopperPearson(std::uint64_t successes,
                                        std::uint64_t trials,
                                        double confidence) {
  if (trials == 0 || successes > trials) {
    return absl::InvalidArgumentError(absl::StrCat(
        "need 0 <= successes <= trials and trials >= 1, got ", successes,
        " / ", trials));
  }
  if (!(confidence > 0.0 && confidence < 1.0)) {
    return absl::InvalidArgumentError(
        absl::StrCat("confidence must lie in (0, 1), got ", confidence));
  }
  const double tail = (1.0 - confidence) / 2.0;
  const auto x = static_cast<double>(successes);
  const auto n = static_cast<double>(trials);
  Interval interval;
  if (successes > 0) {
    interval.low =
        boost::math::quantile(boost::math::beta_distribution<>(x, n - x + 1), tail);
  }
  if (successes < trials) {
    interval.high = boost::math::quantile(
        boost::math::beta_distribution<>(x + 1, n - x), 1.0 - tail);
  }
  return interval;
}

absl::StatusOr<EstimationResult> EstimateGamma(const Game& game,
                                               std::uint64_t trials,
                                               std::uint64_t seed, int threads,
                                               double confidence) {
  if (trials < 1) {
    return absl::InvalidArgumentError("need at least one trial");
  }
  const auto workers = static_cast<std::uint64_t>(
      std::clamp<std::uint64_t>(threads < 1 ? 1 : threads, 1, trials));
  std::vector<std::uint64_t> successes(workers, 0);
  const auto run_block = [&](std::uint64_t w) {
    const std::uint64_t begin = trials * w / workers;
    const std::uint64_t end = trials * (w + 1) / workers;
    std::uint64_t hits = 0;
    for (std::uint64_t t = begin; t < end; ++t) {
      hits += RunTrial(game, seed, t).success ? 1 : 0;
    }
    successes[w] = hits;
  };
  if (workers == 1) {
    run_block(0);
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (std::uint64_t w = 0; w < workers; ++w) pool.emplace_back(run_block, w);
  }

  EstimationResult result;
  result.successes =
      std::accumulate(successes.begin(), successes.end(), std::uint64_t{0});
  result.trials = trials;
  result.seed = seed;
  result.confidence = confidence;
  result.gamma_hat =
      static_cast<double>(result.successes) / static_cast<double>(trials);
  REROLAB_ASSIGN_OR_RETURN(Interval ci,
                           ClopperPearson(result.successes, trials, confidence));
  result.ci_low = ci.low;
  result.ci_high = ci.high;
  return result;
}

}  // namespace rerolab
