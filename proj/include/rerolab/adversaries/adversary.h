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

#ifndef REROLAB_ADVERSARIES_ADVERSARY_H_
#define REROLAB_ADVERSARIES_ADVERSARY_H_

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>

#include "absl/status/statusor.h"
#include "absl/strings/string_view.h"
#include "rerolab/adversaries/latent_model.h"
#include "rerolab/core/dataset.h"
#include "rerolab/core/distribution.h"
#include "rerolab/core/enumeration.h"
#include "rerolab/core/loss.h"
#include "rerolab/mechanisms/mechanism.h"

namespace rerolab {

// Scores within this distance of the best count as tied; ties go to the
// smallest record index.
inline constexpr double kTieTolerance = 1e-12;

// Index of the largest entry, smallest index among near-ties.
std::size_t ArgmaxSmallestIndex(std::span<const double> values);

enum class AdversaryType {
  kObliviousBaseline,
  kExactBayes,
  kEmpiricalBayes,
  kSeparationFixture,
};

std::string AdversaryTypeName(AdversaryType type);
absl::StatusOr<AdversaryType> ParseAdversaryType(absl::string_view name);

struct AdversaryKind {
  AdversaryType type = AdversaryType::kExactBayes;
  // empirical_bayes only: prior draws per output symbol, and the seed of the
  // per-symbol draw streams.
  int samples = 0;
  std::uint64_t seed = 0;

  friend bool operator==(const AdversaryKind&, const AdversaryKind&) = default;
};

// Everything an attack may use besides the mechanism output.
struct AdversaryContext {
  GameVariant variant = GameVariant::kAvgDistReRo;
  int n = 1;
  // The n-1 other records; present iff variant is rero.
  std::optional<Dataset> known_records;
  Distribution prior;
  std::shared_ptr<const Mechanism> mechanism;
  LossSpec loss;
  std::uint64_t enumeration_cap = kDefaultEnumerationCap;
};

struct Guess {
  RecordId record = 0;
  // Posterior probability that `record` succeeds given the output, when the
  // strategy computes one (Bayes kinds); 0 otherwise.
  double posterior_success = 0.0;
  // The output had zero probability under every latent value and the
  // oblivious guess was used instead.
  bool fallback = false;
};

// A reconstruction strategy: a fixed function from output symbols to
// guesses. Thread-safe.
class Adversary {
 public:
  virtual ~Adversary() = default;
  virtual AdversaryType type() const = 0;
  virtual Guess GuessFor(OutputSymbol theta) const = 0;
};

// Best fixed guess without access to the mechanism:
//   rero / avg_dist_rero: argmax_z Pr_{x~D}[loss(x, z) <= eta]
//   bc_dist_rero:         argmax_z 1 - (1 - Pr_{x~D}[loss(x, z) <= eta])^n
absl::StatusOr<RecordId> ObliviousGuess(const Distribution& prior,
                                        const LossSpec& loss,
                                        GameVariant variant, int n);

// The fixture attack against the separation mechanism: echo the released
// record, or guess the all-ones record on bottom.
RecordId SeparationGuess(const RecordUniverse& universe, OutputSymbol theta);

absl::StatusOr<std::shared_ptr<const Adversary>> CreateAdversary(
    const AdversaryKind& kind, const AdversaryContext& context);

// One-shot guess; for exact_bayes this is the posterior argmax
//   rero:  argmax_z Pr[loss(z, zhat) <= eta | M(X_known + z) = theta]
//   avg:   argmax   Pr_{X,i}[loss(x_i, zhat) <= eta | M(X) = theta]
//   bc:    argmax   Pr_X[min_i loss(x_i, zhat) <= eta | M(X) = theta]
// and empirical_bayes replaces the exact posterior with prior draws weighted
// by the output likelihood.
absl::StatusOr<Guess> BayesGuess(const AdversaryKind& kind, OutputSymbol theta,
                                 const AdversaryContext& context);

}  // namespace rerolab

#endif  // REROLAB_ADVERSARIES_ADVERSARY_H_
