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

#include "rerolab/cli/report.h"

#include <cmath>

#include "absl/strings/str_cat.h"
#include "absl/strings/str_format.h"
#include "rerolab/cli/config.h"

namespace rerolab {

using nlohmann::ordered_json;

ordered_json Real(double value) {
  if (std::isnan(value)) return "nan";
  if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
  return value;
}

std::string DescribeCell(const GameConfig& config) {
  std::string mechanism = MechanismKindName(config.mechanism.kind);
  if (MechanismTakesEpsilon(config.mechanism.kind)) {
    absl::StrAppend(&mechanism, "(eps=", config.mechanism.epsilon, ")");
  }
  return absl::StrCat(mechanism, " |X|=", config.prior.universe().size(),
                      " n=", config.n);
}

ordered_json BaselineToJson(const BaselineReport& report,
                            const RecordUniverse& universe) {
  ordered_json out;
  out["kappa"] = report.kappa;
  out["kappa_bar"] = report.kappa_bar;
  out["argmax_record"] = universe.Format(report.argmax_record);
  out["n"] = report.n;
  return out;
}

ordered_json EstimationToJson(const EstimationResult& result) {
  ordered_json out;
  out["gamma_hat"] = result.gamma_hat;
  out["successes"] = result.successes;
  out["trials"] = result.trials;
  out["confidence"] = result.confidence;
  out["ci_low"] = result.ci_low;
  out["ci_high"] = result.ci_high;
  out["seed"] = result.seed;
  return out;
}

ordered_json ExactToJson(const ExactResult& result,
                         const Mechanism& mechanism) {
  ordered_json outputs = ordered_json::array();
  for (const OutputBreakdown& o : result.outputs) {
    ordered_json row;
    row["output"] = mechanism.FormatSymbol(o.symbol);
    row["probability"] = o.probability;
    row["success_given"] = o.success_given;
    row["guess"] = mechanism.universe().Format(o.guess);
    if (o.fallback) row["fallback"] = true;
    outputs.push_back(std::move(row));
  }
  ordered_json out;
  out["gamma"] = result.gamma;
  out["outputs"] = std::move(outputs);
  return out;
}

ordered_json BoundAuditToJson(const BoundAudit& audit) {
  ordered_json out;
  out["theorem"] = TheoremIdName(audit.theorem);
  out["applicable"] = audit.applicable;
  out["gamma_exact"] = audit.gamma_exact;
  out["bound_value"] = Real(audit.bound_value);
  out["bound_raw"] = Real(audit.bound_raw);
  out["margin"] = Real(audit.margin);
  out["passed"] = audit.passed;
  return out;
}

ordered_json GridRowToJson(const GridAuditRow& row) {
  ordered_json out;
  out["config"] = GameConfigToJson(row.config);
  out["config"].erase("variant");
  out["kappa"] = row.baseline.kappa;
  out["kappa_bar"] = row.baseline.kappa_bar;
  out["measured_epsilon"] = Real(row.measured_epsilon);
  out["gamma_rero"] = row.transfer.gamma_rero;
  ordered_json context = ordered_json::array();
  for (RecordId r : row.transfer.worst_context) {
    context.push_back(row.config.prior.universe().Format(r));
  }
  out["worst_context"] = std::move(context);
  out["audits"] = ordered_json::array(
      {BoundAuditToJson(row.dp_avg), BoundAuditToJson(row.dp_bc),
       BoundAuditToJson(row.transfer.avg), BoundAuditToJson(row.transfer.bc)});
  out["passed"] = row.passed();
  return out;
}

ordered_json SeparationToJson(const SeparationReport& report) {
  ordered_json out;
  out["k"] = report.k;
  out["n"] = report.n;
  out["rero_fixture"] = report.rero_fixture;
  out["avg_fixture"] = report.avg_fixture;
  out["avg_bayes"] = report.avg_bayes;
  out["avg_bound"] = report.avg_bound;
  out["kappa"] = report.kappa;
  out["measured_epsilon"] = Real(report.measured_epsilon);
  out["rero_prong_holds"] = report.rero_prong_holds();
  out["avg_fixture_holds"] = report.avg_fixture_holds();
  out["avg_bayes_holds"] = report.avg_bayes_holds();
  return out;
}

std::string FormatAuditTable(const std::vector<GridAuditRow>& rows) {
  std::string table = absl::StrFormat(
      "%-40s %-12s %10s %10s %10s %10s %11s  %s\n", "config", "theorem",
      "kappa", "kappa_bar", "gamma", "bound", "margin", "status");
  for (const GridAuditRow& row : rows) {
    const std::string cell = DescribeCell(row.config);
    for (const BoundAudit* audit :
         {&row.dp_avg, &row.dp_bc, &row.transfer.avg, &row.transfer.bc}) {
      const char* status =
          !audit->applicable ? "n/a" : (audit->passed ? "pass" : "FAIL");
      table += absl::StrFormat(
          "%-40s %-12s %10.6f %10.6f %10.6f %10.6f %11.3e  %s\n", cell,
          TheoremIdName(audit->theorem), row.baseline.kappa,
          row.baseline.kappa_bar, audit->gamma_exact, audit->bound_value,
          audit->margin, status);
    }
  }
  return table;
}

}  // namespace rerolab
