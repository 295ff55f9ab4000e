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

#ifndef REROLAB_BOUNDS_AUDIT_H_
#define REROLAB_BOUNDS_AUDIT_H_

#include <string>
#include <vector>

#include "absl/status/statusor.h"
#include "absl/strings/string_view.h"
#include "rerolab/bounds/baseline.h"
#include "rerolab/core/dataset.h"
#include "rerolab/games/game.h"

namespace rerolab {

inline constexpr double kAuditTolerance = 1e-12;

enum class TheoremId { kDpToAvg, kDpToBc, kReroToAvg, kReroToBc };

std::string TheoremIdName(TheoremId id);
absl::StatusOr<TheoremId> ParseTheoremId(absl::string_view name);

struct BoundAudit {
  TheoremId theorem = TheoremId::kDpToAvg;
  bool applicable = true;
  double gamma_exact = 0.0;
  // The compared bound, and the unclamped expression it came from. Both are
  // +infinity when the audit is not applicable.
  double bound_value = 0.0;
  double bound_raw = 0.0;
  double margin = 0.0;  // bound_value - gamma_exact
  bool passed = true;   // not-applicable audits pass vacuously
};

// Bound of e^eps * kappa (average variant) or min(1, n e^eps kappa) (best
// case variant) against the exact success of the configured adversary, with
// eps measured on the mechanism. Not applicable when the measured eps is
// infinite. `config.variant` selects the theorem and must not be rero.
absl::StatusOr<BoundAudit> AuditDpBound(const GameConfig& config);

// As above with a previously measured eps.
absl::StatusOr<BoundAudit> AuditDpBound(const GameConfig& config,
                                        double measured_epsilon);

struct TransferAudit {
  double gamma_rero = 0.0;  // max over X_{-1} of the exact informed success
  Dataset worst_context;
  BoundAudit avg;  // avg gamma <= gamma_rero
  BoundAudit bc;   // bc gamma <= n gamma_rero, unclamped
};

// Both transfer checks with the configured adversary; `config.variant` and
// `config.fixed_context` are ignored.
absl::StatusOr<TransferAudit> AuditReroTransfer(const GameConfig& config);

struct GridAuditRow {
  GameConfig config;  // variant and fixed_context are unused
  BaselineReport baseline;
  double measured_epsilon = 0.0;
  BoundAudit dp_avg;
  BoundAudit dp_bc;
  TransferAudit transfer;

  bool passed() const {
    return dp_avg.passed && dp_bc.passed && transfer.avg.passed &&
           transfer.bc.passed;
  }
};

// Audits every cell. Cells run on up to `threads` workers; rows come back in
// cell order. The first failing cell (in cell order) decides the error.
absl::StatusOr<std::vector<GridAuditRow>> AuditGrid(
    const std::vector<GameConfig>& cells, int threads = 1);

}  // namespace rerolab

#endif  // REROLAB_BOUNDS_AUDIT_H_
