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

#include "rerolab/bounds/separation.h"

#include <cmath>
#include <vector>

#include "absl/status/status.h"
#include "absl/strings/str_cat.h"
#include "rerolab/base/status_macros.h"
#include "rerolab/bounds/audit.h"
#include "rerolab/bounds/baseline.h"
#include "rerolab/games/exact.h"
#include "rerolab/mechanisms/dp_meter.h"

namespace rerolab {

bool SeparationReport::avg_fixture_holds() const {
  return avg_fixture <= avg_bound + kAuditTolerance;
}

bool SeparationReport::avg_bayes_holds() const {
  return avg_bayes <= avg_bound + kAuditTolerance;
}

absl::StatusOr<SeparationReport> SeparationExperiment(int k, int n,
                                                      std::uint64_t cap) {
  if (n < 2) {
    return absl::InvalidArgumentError(
        absl::StrCat("separation experiment needs n >= 2, got ", n));
  }
  REROLAB_ASSIGN_OR_RETURN(RecordUniverse universe,
                           RecordUniverse::Bitstring(k));
  GameConfig config{
      .variant = GameVariant::kReRo,
      .prior = Distribution::Uniform(universe),
      .n = n,
      .mechanism = {MechanismKind::kSeparation, 0.0},
      .adversary = {AdversaryType::kSeparationFixture},
      .loss = {LossKind::kExactMatch, 0.0},
      .fixed_context = Dataset(std::vector<RecordId>(n - 1, 0)),
      .enumeration_cap = cap,
  };

  SeparationReport report{.k = k, .n = n};
  REROLAB_ASSIGN_OR_RETURN(ExactResult rero, ExactGamma(config));
  report.rero_fixture = rero.gamma;

  config.variant = GameVariant::kAvgDistReRo;
  config.fixed_context.reset();
  REROLAB_ASSIGN_OR_RETURN(ExactResult fixture, ExactGamma(config));
  report.avg_fixture = fixture.gamma;
  config.adversary = {AdversaryType::kExactBayes};
  REROLAB_ASSIGN_OR_RETURN(ExactResult bayes, ExactGamma(config));
  report.avg_bayes = bayes.gamma;

  REROLAB_ASSIGN_OR_RETURN(KappaResult kappa,
                           ComputeKappa(config.prior, config.loss));
  report.kappa = kappa.value;
  report.avg_bound = std::ldexp(1.0, -k) + std::ldexp(1.0, -(n - 1) * k);
  REROLAB_ASSIGN_OR_RETURN(report.measured_epsilon,
                           MeasureEpsilon(config.mechanism, universe, n, cap));
  return report;
}

}  // namespace rerolab
