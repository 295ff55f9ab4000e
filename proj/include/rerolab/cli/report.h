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

#ifndef REROLAB_CLI_REPORT_H_
#define REROLAB_CLI_REPORT_H_

#include <string>
#include <vector>

#include "json.hpp"
#include "rerolab/bounds/audit.h"
#include "rerolab/bounds/baseline.h"
#include "rerolab/bounds/separation.h"
#include "rerolab/games/estimate.h"
#include "rerolab/games/exact.h"

namespace rerolab {

// JSON number, or the strings "inf" / "-inf" / "nan" which JSON lacks.
nlohmann::ordered_json Real(double value);

// Short human label of a game cell, e.g. "randomized_response(eps=1) |X|=4 n=2".
std::string DescribeCell(const GameConfig& config);

nlohmann::ordered_json BaselineToJson(const BaselineReport& report,
                                      const RecordUniverse& universe);
nlohmann::ordered_json EstimationToJson(const EstimationResult& result);
nlohmann::ordered_json ExactToJson(const ExactResult& result,
                                   const Mechanism& mechanism);
nlohmann::ordered_json BoundAuditToJson(const BoundAudit& audit);
nlohmann::ordered_json GridRowToJson(const GridAuditRow& row);
nlohmann::ordered_json SeparationToJson(const SeparationReport& report);

// One line per (cell, theorem): config, kappa, kappa_bar, gamma, bound,
// margin and verdict.
std::string FormatAuditTable(const std::vector<GridAuditRow>& rows);

}  // namespace rerolab

#endif  // REROLAB_CLI_REPORT_H_
