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

#ifndef REROLAB_BOUNDS_SEPARATION_H_
#define REROLAB_BOUNDS_SEPARATION_H_

#include <cstdint>

#include "absl/status/statusor.h"
#include "rerolab/core/enumeration.h"

namespace rerolab {

struct SeparationReport {
  int k = 0;
  int n = 0;
  // Informed game with X_{-1} = all-zeros, fixture adversary.
  double rero_fixture = 0.0;
  // Average distributional game.
  double avg_fixture = 0.0;
  double avg_bayes = 0.0;
  double kappa = 0.0;
  double avg_bound = 0.0;  // 2^-k + 2^-(n-1)k
  double measured_epsilon = 0.0;

  bool rero_prong_holds() const { return rero_fixture == 1.0; }
  // avg success <= avg_bound + kAuditTolerance, per adversary.
  bool avg_fixture_holds() const;
  bool avg_bayes_holds() const;
  bool avg_prong_holds() const {
    return avg_fixture_holds() && avg_bayes_holds();
  }
};

// Uniform prior on {0,1}^k, exact-match loss, eta = 0, separation mechanism.
// Requires 1 <= k <= 24 and n >= 2.
absl::StatusOr<SeparationReport> SeparationExperiment(
    int k, int n, std::uint64_t cap = kDefaultEnumerationCap);

}  // namespace rerolab

#endif  // REROLAB_BOUNDS_SEPARATION_H_
