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

#include "rerolab/bounds/audit.h"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <limits>
#include <optional>
#include <thread>

#include "absl/status/status.h"
#include "absl/strings/str_cat.h"
#include "rerolab/base/status_macros.h"
#include "rerolab/games/exact.h"
#include "rerolab/mechanisms/dp_meter.h"

namespace rerolab {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

BoundAudit Compare(TheoremId theorem, double gamma, double raw,
                   double bound) {
  BoundAudit audit;
  audit.theorem = theorem;
  audit.gamma_exact = gamma;
  audit.bound_raw = raw;
  audit.bound_value = bound;
  audit.margin = bound - gamma;
  audit.passed = audit.margin >= -kAuditTolerance;
  return audit;
}

absl::StatusOr<GridAuditRow> AuditCell(const GameConfig& cell) {
  GridAuditRow row{.config = cell};
  REROLAB_ASSIGN_OR_RETURN(row.baseline,
                           ComputeBaseline(cell.prior, cell.loss, cell.n));
  REROLAB_ASSIGN_OR_RETURN(
      row.measured_epsilon,
      MeasureEpsilon(cell.mechanism, cell.prior.universe(), cell.n,
                     cell.enumeration_cap));
  GameConfig game = cell;
  game.fixed_context.reset();
  game.variant = GameVariant::kAvgDistReRo;
  REROLAB_ASSIGN_OR_RETURN(row.dp_avg,
                           AuditDpBound(game, row.measured_epsilon));
  game.variant = GameVariant::kBcDistReRo;
  REROLAB_ASSIGN_OR_RETURN(row.dp_bc, AuditDpBound(game, row.measured_epsilon));
  REROLAB_ASSIGN_OR_RETURN(row.transfer, AuditReroTransfer(cell));
  return row;
}

}  // namespace

std::string TheoremIdName(TheoremId id) {
  switch (id) {
    case TheoremId::kDpToAvg:
      return "dp_to_avg";
    case TheoremId::kDpToBc:
      return "dp_to_bc";
    case TheoremId::kReroToAvg:
      return "rero_to_avg";
    case TheoremId::kReroToBc:
      return "rero_to_bc";
  }
  return "unknown";
}

absl::StatusOr<TheoremId> ParseTheoremId(absl::string_view name) {
  for (TheoremId id : {TheoremId::kDpToAvg, TheoremId::kDpToBc,
                       TheoremId::kReroToAvg, TheoremId::kReroToBc}) {
    if (TheoremIdName(id) == name) return id;
  }
  return absl::InvalidArgumentError(absl::StrCat("unknown theorem '", name, "'"));
}

absl::StatusOr<BoundAudit> AuditDpBound(const GameConfig& config) {
  REROLAB_ASSIGN_OR_RETURN(
      double epsilon,
      MeasureEpsilon(config.mechanism, config.prior.universe(), config.n,
                     config.enumeration_cap));
  return AuditDpBound(config, epsilon);
}

absl::StatusOr<BoundAudit> AuditDpBound(const GameConfig& config,
                                        double measured_epsilon) {
  if (config.variant == GameVariant::kReRo) {
    return absl::InvalidArgumentError(
        "DP bounds are audited on the distributional variants");
  }
  if (std::isnan(measured_epsilon) || measured_epsilon < 0.0) {
    return absl::InvalidArgumentError(
        absl::StrCat("bad measured epsilon ", measured_epsilon));
  }
  const bool avg = config.variant == GameVariant::kAvgDistReRo;
  const TheoremId theorem = avg ? TheoremId::kDpToAvg : TheoremId::kDpToBc;
  REROLAB_ASSIGN_OR_RETURN(ExactResult exact, ExactGamma(config));
  if (std::isinf(measured_epsilon)) {
    BoundAudit audit = Compare(theorem, exact.gamma, kInf, kInf);
    audit.applicable = false;
    audit.passed = true;
    return audit;
  }
  REROLAB_ASSIGN_OR_RETURN(KappaResult kappa,
                           ComputeKappa(config.prior, config.loss));
  const double raw = (avg ? 1.0 : static_cast<double>(config.n)) *
                     std::exp(measured_epsilon) * kappa.value;
  return Compare(theorem, exact.gamma, raw, avg ? raw : std::min(1.0, raw));
}

absl::StatusOr<TransferAudit> AuditReroTransfer(const GameConfig& config) {
  TransferAudit audit;
  REROLAB_ASSIGN_OR_RETURN(ReRoMaximum rero, MaxReRoGamma(config));
  audit.gamma_rero = rero.gamma;
  audit.worst_context = rero.worst_context;

  GameConfig game = config;
  game.fixed_context.reset();
  game.variant = GameVariant::kAvgDistReRo;
  REROLAB_ASSIGN_OR_RETURN(ExactResult avg, ExactGamma(game));
  game.variant = GameVariant::kBcDistReRo;
  REROLAB_ASSIGN_OR_RETURN(ExactResult bc, ExactGamma(game));

  audit.avg = Compare(TheoremId::kReroToAvg, avg.gamma, rero.gamma, rero.gamma);
  const double scaled = config.n * rero.gamma;
  audit.bc = Compare(TheoremId::kReroToBc, bc.gamma, scaled, scaled);
  return audit;
}

absl::StatusOr<std::vector<GridAuditRow>> AuditGrid(
    const std::vector<GameConfig>& cells, int threads) {
  std::vector<std::optional<absl::StatusOr<GridAuditRow>>> results(
      cells.size());
  std::atomic<std::size_t> next{0};
  const auto work = [&] {
    for (std::size_t i = next++; i < cells.size(); i = next++) {
      results[i] = AuditCell(cells[i]);
    }
  };
  const auto workers = static_cast<std::size_t>(std::clamp<std::size_t>(
      threads < 1 ? 1 : static_cast<std::size_t>(threads), 1,
      std::max<std::size_t>(cells.size(), 1)));
  if (workers == 1) {
    work();
  } else {
    std::vector<std::jthread> pool;
    for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(work);
  }
  std::vector<GridAuditRow> rows;
  rows.reserve(cells.size());
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (!results[i]->ok()) {
      return absl::Status(results[i]->status().code(),
                          absl::StrCat("grid cell ", i, ": ",
                                       results[i]->status().message()));
    }
    rows.push_back(*std::move(*results[i]));
  }
  return rows;
}

}  // namespace rerolab
