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

#include "rerolab/adversaries/adversary.h"

#include <cmath>
#include <mutex>
#include <utility>
#include <vector>

#include "absl/container/flat_hash_map.h"
#include "absl/status/status.h"
#include "absl/strings/str_cat.h"
#include "rerolab/base/status_macros.h"

namespace rerolab {
namespace {

// Memoizes a pure per-symbol computation.
class GuessCache {
 public:
  template <typename Compute>
  Guess GetOrCompute(OutputSymbol theta, Compute&& compute) const {
    {
      std::lock_guard<std::mutex> lock(mu_);
      auto it = cache_.find(theta);
      if (it != cache_.end()) return it->second;
    }
    const Guess guess = compute();
    std::lock_guard<std::mutex> lock(mu_);
    cache_.emplace(theta, guess);
    return guess;
  }

 private:
  mutable std::mutex mu_;
  mutable absl::flat_hash_map<OutputSymbol, Guess> cache_;
};

class ObliviousAdversary final : public Adversary {
 public:
  explicit ObliviousAdversary(RecordId guess) : guess_(guess) {}
  AdversaryType type() const override {
    return AdversaryType::kObliviousBaseline;
  }
  Guess GuessFor(OutputSymbol) const override { return {guess_, 0.0, false}; }

 private:
  RecordId guess_;
};

class SeparationFixtureAdversary final : public Adversary {
 public:
  explicit SeparationFixtureAdversary(RecordUniverse universe)
      : universe_(std::move(universe)) {}
  AdversaryType type() const override {
    return AdversaryType::kSeparationFixture;
  }
  Guess GuessFor(OutputSymbol theta) const override {
    return {SeparationGuess(universe_, theta), 0.0, false};
  }

 private:
  RecordUniverse universe_;
};

// Turns accumulated (output mass, per-guess success mass) into a Guess.
Guess PosteriorArgmax(double mass, const std::vector<double>& success_mass,
                      RecordId fallback) {
  if (!(mass > 0.0)) return {fallback, 0.0, true};
  const auto best = static_cast<RecordId>(ArgmaxSmallestIndex(success_mass));
  return {best, success_mass[best] / mass, false};
}

class ExactBayesAdversary final : public Adversary {
 public:
  ExactBayesAdversary(AdversaryContext context, LatentModel latents,
                      SuccessScorer scorer, RecordId fallback)
      : context_(std::move(context)),
        latents_(std::move(latents)),
        scorer_(std::move(scorer)),
        fallback_(fallback) {}

  AdversaryType type() const override { return AdversaryType::kExactBayes; }

  Guess GuessFor(OutputSymbol theta) const override {
    return cache_.GetOrCompute(theta, [&] { return Compute(theta); });
  }

 private:
  Guess Compute(OutputSymbol theta) const {
    const std::uint64_t size = context_.prior.universe().size();
    std::vector<double> success_mass(size, 0.0);
    std::vector<double> scores;
    double mass = 0.0;
    for (const Latent& latent : latents_.latents()) {
      if (latent.weight == 0.0) continue;
      const double joint =
          latent.weight *
          context_.mechanism->OutputProbability(latent.input, theta);
      if (joint == 0.0) continue;
      mass += joint;
      scorer_.Scores(latent.input, scores);
      for (std::uint64_t z = 0; z < size; ++z) {
        success_mass[z] += joint * scores[z];
      }
    }
    return PosteriorArgmax(mass, success_mass, fallback_);
  }

  AdversaryContext context_;
  LatentModel latents_;
  SuccessScorer scorer_;
  RecordId fallback_;
  GuessCache cache_;
};

// Monte Carlo stand-in for the exact posterior: `samples` prior draws of the
// mechanism input, each weighted by Pr[M(input) = theta]. The draws for a
// given theta come from their own stream, so the strategy is still a fixed
// function of theta.
class EmpiricalBayesAdversary final : public Adversary {
 public:
  EmpiricalBayesAdversary(AdversaryContext context, AdversaryKind kind,
                          SuccessScorer scorer, RecordId fallback)
      : context_(std::move(context)),
        kind_(kind),
        scorer_(std::move(scorer)),
        fallback_(fallback) {}

  AdversaryType type() const override {
    return AdversaryType::kEmpiricalBayes;
  }

  Guess GuessFor(OutputSymbol theta) const override {
    return cache_.GetOrCompute(theta, [&] { return Compute(theta); });
  }

 private:
  Guess Compute(OutputSymbol theta) const {
    const std::uint64_t size = context_.prior.universe().size();
    StreamEngine engine(
        DeriveStreamSeed(kind_.seed, StreamDomain::kAdversary, theta));
    std::vector<double> success_mass(size, 0.0);
    std::vector<double> scores;
    double mass = 0.0;
    for (int s = 0; s < kind_.samples; ++s) {
      const Dataset input =
          SampleLatentInput(context_.prior, context_.n, context_.variant,
                            context_.known_records, engine);
      const double likelihood =
          context_.mechanism->OutputProbability(input, theta);
      if (likelihood == 0.0) continue;
      mass += likelihood;
      scorer_.Scores(input, scores);
      for (std::uint64_t z = 0; z < size; ++z) {
        success_mass[z] += likelihood * scores[z];
      }
    }
    return PosteriorArgmax(mass, success_mass, fallback_);
  }

  AdversaryContext context_;
  AdversaryKind kind_;
  SuccessScorer scorer_;
  RecordId fallback_;
  GuessCache cache_;
};

absl::Status CheckContext(const AdversaryContext& context) {
  if (context.mechanism == nullptr) {
    return absl::InvalidArgumentError("adversary context has no mechanism");
  }
  if (!(context.mechanism->universe() == context.prior.universe())) {
    return absl::InvalidArgumentError(
        "mechanism and prior are over different universes");
  }
  if (context.mechanism->n() != context.n) {
    return absl::InvalidArgumentError(absl::StrCat(
        "mechanism is built for n = ", context.mechanism->n(),
        ", context says n = ", context.n));
  }
  const bool rero = context.variant == GameVariant::kReRo;
  if (rero != context.known_records.has_value()) {
    return absl::InvalidArgumentError(
        rero ? "rero needs the n-1 known records"
             : "known records are only available in rero");
  }
  if (rero) {
    if (context.known_records->n() != context.n - 1) {
      return absl::InvalidArgumentError(
          absl::StrCat("rero needs exactly ", context.n - 1,
                       " known records, got ", context.known_records->n()));
    }
    REROLAB_RETURN_IF_ERROR(
        context.known_records->Validate(context.prior.universe()));
  }
  return absl::OkStatus();
}

}  // namespace

std::size_t ArgmaxSmallestIndex(std::span<const double> values) {
  std::size_t best = 0;
  for (std::size_t i = 1; i < values.size(); ++i) {
    if (values[i] > values[best] + kTieTolerance) best = i;
  }
  return best;
}

std::string AdversaryTypeName(AdversaryType type) {
  switch (type) {
    case AdversaryType::kObliviousBaseline:
      return "oblivious_baseline";
    case AdversaryType::kExactBayes:
      return "exact_bayes";
    case AdversaryType::kEmpiricalBayes:
      return "empirical_bayes";
    case AdversaryType::kSeparationFixture:
      return "separation_fixture";
  }
  return "";
}

absl::StatusOr<AdversaryType> ParseAdversaryType(absl::string_view name) {
  for (AdversaryType type :
       {AdversaryType::kObliviousBaseline, AdversaryType::kExactBayes,
        AdversaryType::kEmpiricalBayes, AdversaryType::kSeparationFixture}) {
    if (AdversaryTypeName(type) == name) return type;
  }
  return absl::InvalidArgumentError(
      absl::StrCat("unknown adversary kind '", name, "'"));
}

absl::StatusOr<RecordId> ObliviousGuess(const Distribution& prior,
                                        const LossSpec& loss,
                                        GameVariant variant, int n) {
  if (n < 1) {
    return absl::InvalidArgumentError(
        absl::StrCat("dataset size must be >= 1, got ", n));
  }
  REROLAB_ASSIGN_OR_RETURN(std::vector<double> objective,
                           GuessSuccessProbabilities(prior, loss));
  if (variant == GameVariant::kBcDistReRo && n > 1) {
    for (double& p : objective) p = 1.0 - std::pow(1.0 - p, n);
  }
  return static_cast<RecordId>(ArgmaxSmallestIndex(objective));
}

RecordId SeparationGuess(const RecordUniverse& universe, OutputSymbol theta) {
  const std::optional<RecordId> released =
      SeparationSymbolToRecord(universe, theta);
  return released.value_or(universe.LastRecord());
}

absl::StatusOr<std::shared_ptr<const Adversary>> CreateAdversary(
    const AdversaryKind& kind, const AdversaryContext& context) {
  REROLAB_RETURN_IF_ERROR(CheckContext(context));
  REROLAB_ASSIGN_OR_RETURN(
      RecordId oblivious,
      ObliviousGuess(context.prior, context.loss, context.variant, context.n));
  REROLAB_ASSIGN_OR_RETURN(
      LossFunction loss, LossFunction::Create(context.loss,
                                              context.prior.universe()));
  SuccessScorer scorer(std::move(loss), context.variant,
                       context.prior.universe().size());
  switch (kind.type) {
    case AdversaryType::kObliviousBaseline:
      return std::make_shared<ObliviousAdversary>(oblivious);
    case AdversaryType::kSeparationFixture:
      if (context.mechanism->spec().kind != MechanismKind::kSeparation) {
        return absl::InvalidArgumentError(
            "separation_fixture only attacks the separation mechanism");
      }
      return std::make_shared<SeparationFixtureAdversary>(
          context.prior.universe());
    case AdversaryType::kExactBayes: {
      REROLAB_ASSIGN_OR_RETURN(
          LatentModel latents,
          LatentModel::Create(context.prior, context.n, context.variant,
                              context.known_records,
                              context.mechanism->PermutationInvariant(),
                              context.enumeration_cap));
      return std::make_shared<ExactBayesAdversary>(
          context, std::move(latents), std::move(scorer), oblivious);
    }
    case AdversaryType::kEmpiricalBayes:
      if (kind.samples < 1) {
        return absl::InvalidArgumentError(
            "empirical_bayes needs samples >= 1");
      }
      return std::make_shared<EmpiricalBayesAdversary>(
          context, kind, std::move(scorer), oblivious);
  }
  return absl::InternalError("unreachable");
}

absl::StatusOr<Guess> BayesGuess(const AdversaryKind& kind, OutputSymbol theta,
                                 const AdversaryContext& context) {
  if (kind.type != AdversaryType::kExactBayes &&
      kind.type != AdversaryType::kEmpiricalBayes) {
    return absl::InvalidArgumentError(absl::StrCat(
        "BayesGuess needs a Bayes adversary, got ",
        AdversaryTypeName(kind.type)));
  }
  REROLAB_ASSIGN_OR_RETURN(std::shared_ptr<const Adversary> adversary,
                           CreateAdversary(kind, context));
  if (theta >= context.mechanism->AlphabetSize()) {
    return absl::InvalidArgumentError(
        absl::StrCat("output symbol ", theta, " outside the alphabet"));
  }
  return adversary->GuessFor(theta);
}

}  // namespace rerolab
