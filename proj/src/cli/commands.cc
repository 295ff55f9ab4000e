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

#include "rerolab/cli/commands.h"

#include <algorithm>
#include <fstream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "absl/status/status.h"
#include "absl/status/statusor.h"
#include "absl/strings/str_cat.h"
#include "absl/strings/str_format.h"
#include "absl/strings/str_join.h"
#include "rerolab/bounds/audit.h"
#include "rerolab/bounds/baseline.h"
#include "rerolab/bounds/separation.h"
#include "rerolab/cli/config.h"
#include "rerolab/cli/report.h"
#include "rerolab/cli/run_log.h"
#include "rerolab/games/estimate.h"
#include "rerolab/games/exact.h"
#include "rerolab/mechanisms/dp_meter.h"
#include "rerolab/taxonomy/render.h"

namespace rerolab {
namespace {

struct Options {
  std::string config;
  std::uint64_t trials = 100'000;
  std::uint64_t seed = 0;
  int threads = 1;
  std::string out = "runs.jsonl";
  bool no_log = false;
  bool json = false;
  double confidence = kDefaultConfidence;
  int k = 4;
  int n = 3;
  std::vector<std::string> names;
  std::string group;
  std::string svg;
};

// Carries a failed status out of a handler.
class CommandError {
 public:
  explicit CommandError(absl::Status status) : status_(std::move(status)) {}
  const absl::Status& status() const { return status_; }

 private:
  absl::Status status_;
};

template <typename T>
T Unwrap(absl::StatusOr<T> value) {
  if (!value.ok()) throw CommandError(value.status());
  return *std::move(value);
}

void Check(absl::Status status) {
  if (!status.ok()) throw CommandError(std::move(status));
}

class Commands {
 public:
  Commands(const Options& options, std::ostream& out)
      : options_(options), out_(out) {}

  int Baseline() {
    const GameConfig game = LoadGame();
    const BaselineReport report =
        Unwrap(ComputeBaseline(game.prior, game.loss, game.n));
    const RecordUniverse& universe = game.prior.universe();
    if (options_.json) {
      out_ << BaselineToJson(report, universe).dump() << "\n";
    } else {
      out_ << absl::StrFormat(
          "kappa      %.17g\nkappa_bar  %.17g\nargmax     %s\nn          %d\n",
          report.kappa, report.kappa_bar,
          universe.Format(report.argmax_record), report.n);
    }
    return kExitOk;
  }

  int Estimate() {
    const GameConfig config = LoadGame();
    const Game game = Unwrap(Game::Create(config));
    const EstimationResult result =
        Unwrap(EstimateGamma(game, options_.trials, options_.seed,
                             options_.threads, options_.confidence));
    const RunRecord record = Record("estimate", EstimationToJson(result));
    if (options_.json) {
      out_ << ToJson(record).dump() << "\n";
    } else {
      out_ << absl::StrFormat(
          "gamma_hat  %.6f  (%d/%d)\n%g%% CI     [%.6f, %.6f]\nseed       "
          "%d\n",
          result.gamma_hat, result.successes, result.trials,
          100 * result.confidence, result.ci_low, result.ci_high,
          result.seed);
    }
    return kExitOk;
  }

  int Exact() {
    const GameConfig config = LoadGame();
    const Game game = Unwrap(Game::Create(config));
    const ExactResult result = Unwrap(ExactGamma(game));
    const RunRecord record =
        Record("exact", ExactToJson(result, game.mechanism()));
    if (options_.json) {
      out_ << ToJson(record).dump() << "\n";
    } else {
      out_ << absl::StrFormat("gamma      %.17g\noutputs    %d\n", result.gamma,
                              result.outputs.size());
    }
    return kExitOk;
  }

  int Audit() {
    const LoadedConfig loaded = Load();
    std::vector<GameConfig> cells;
    if (loaded.kind == ConfigKind::kGrid) {
      cells = loaded.grid;
    } else if (loaded.kind == ConfigKind::kGame) {
      cells.push_back(*loaded.game);
    } else {
      Check(absl::InvalidArgumentError("audit needs a grid or game config"));
    }
    const std::vector<GridAuditRow> rows =
        Unwrap(AuditGrid(cells, options_.threads));
    nlohmann::ordered_json list = nlohmann::ordered_json::array();
    bool passed = true;
    for (const GridAuditRow& row : rows) {
      list.push_back(GridRowToJson(row));
      passed = passed && row.passed();
    }
    nlohmann::ordered_json result;
    result["cells"] = std::move(list);
    result["passed"] = passed;
    const RunRecord record = Record("audit", std::move(result), loaded.hash);
    if (options_.json) {
      out_ << ToJson(record).dump() << "\n";
    } else {
      out_ << FormatAuditTable(rows)
           << absl::StrFormat("%d cells, %s\n", rows.size(),
                              passed ? "all audits pass" : "AUDIT FAILURE");
    }
    return passed ? kExitOk : kExitCheckFailed;
  }

  int Separation() {
    const SeparationReport report =
        Unwrap(SeparationExperiment(options_.k, options_.n));
    nlohmann::json document;
    document["separation"] = {{"k", options_.k}, {"n", options_.n}};
    const RunRecord record =
        Record("separation", SeparationToJson(report),
               Sha256Hex(CanonicalBytes(document)));
    const bool holds = report.rero_prong_holds() && report.avg_prong_holds();
    if (options_.json) {
      out_ << ToJson(record).dump() << "\n";
    } else {
      const auto verdict = [](bool ok) { return ok ? "holds" : "VIOLATED"; };
      out_ << absl::StrFormat(
          "k=%d n=%d, uniform prior, exact match, eta=0\n"
          "rero, X_-1 = zeros, fixture    %.17g  [%s]\n"
          "avg_dist_rero, fixture         %.17g  [%s]\n"
          "avg_dist_rero, exact_bayes     %.17g  [%s]\n"
          "avg bound 2^-k + 2^-(n-1)k     %.17g\n"
          "kappa                          %.17g\n"
          "measured epsilon               %g\n",
          report.k, report.n, report.rero_fixture,
          verdict(report.rero_prong_holds()), report.avg_fixture,
          verdict(report.avg_fixture_holds()), report.avg_bayes,
          verdict(report.avg_bayes_holds()), report.avg_bound, report.kappa,
          report.measured_epsilon);
    }
    return holds ? kExitOk : kExitCheckFailed;
  }

  int MeasureEps() {
    const GameConfig game = LoadGame();
    const double epsilon =
        Unwrap(MeasureEpsilon(game.mechanism, game.prior.universe(), game.n,
                              game.enumeration_cap));
    nlohmann::ordered_json result;
    result["mechanism"] = MechanismToJson(game.mechanism);
    result["measured_epsilon"] = Real(epsilon);
    const RunRecord record = Record("measure-epsilon", std::move(result));
    if (options_.json) {
      out_ << ToJson(record).dump() << "\n";
    } else {
      out_ << absl::StrFormat("measured epsilon  %.17g\n", epsilon);
    }
    return kExitOk;
  }

  int TaxonomyValidate() {
    const AttackRegistry registry = LoadRegistry();
    const std::vector<Finding> findings = registry.ValidateAll();
    const auto errors = std::count_if(
        findings.begin(), findings.end(),
        [](const Finding& f) { return f.severity == Severity::kError; });
    if (options_.json) {
      nlohmann::ordered_json list = nlohmann::ordered_json::array();
      for (const Finding& f : findings) {
        list.push_back({{"severity", SeverityName(f.severity)},
                        {"entry", f.entry},
                        {"field", f.field},
                        {"message", f.message}});
      }
      nlohmann::ordered_json result;
      result["entries"] = registry.entries().size();
      result["errors"] = errors;
      result["warnings"] = findings.size() - errors;
      result["findings"] = std::move(list);
      out_ << result.dump() << "\n";
    } else {
      for (const Finding& f : findings) {
        out_ << absl::StrFormat("%-7s %-34s %-20s %s\n",
                                SeverityName(f.severity), f.entry, f.field,
                                f.message);
      }
      out_ << absl::StrFormat("%d entries, %d errors, %d warnings\n",
                              registry.entries().size(), errors,
                              findings.size() - errors);
    }
    return errors == 0 ? kExitOk : kExitCheckFailed;
  }

  int TaxonomyList() {
    const AttackRegistry registry = LoadRegistry();
    if (options_.json) {
      out_ << registry.ToJson().dump() << "\n";
      return kExitOk;
    }
    for (const AttackSpec& spec : registry.entries()) {
      if (spec.stub) {
        out_ << absl::StrFormat("%-34s stub (%s)\n", spec.name,
                                spec.citation.value_or(""));
        continue;
      }
      std::vector<std::string> values;
      for (Dimension d : kAllDimensions) values.push_back(spec.Value(d));
      out_ << absl::StrFormat("%-34s %s\n", spec.name,
                              absl::StrJoin(values, " | "));
    }
    return kExitOk;
  }

  int TaxonomyRender() {
    const AttackRegistry registry = LoadRegistry();
    std::vector<std::string> selection = options_.names;
    if (!options_.group.empty()) {
      const std::vector<std::string> members =
          registry.GroupMembers(options_.group);
      if (members.empty()) {
        Check(absl::NotFoundError(
            absl::StrCat("no entries in group '", options_.group, "'")));
      }
      selection.insert(selection.end(), members.begin(), members.end());
    }
    const std::string svg =
        Unwrap(RenderParallelCoordinates(registry, selection));
    if (options_.svg.empty() || options_.svg == "-") {
      out_ << svg;
    } else {
      std::ofstream file(options_.svg, std::ios::binary);
      file << svg;
      if (!file) {
        Check(absl::PermissionDeniedError(
            absl::StrCat("cannot write '", options_.svg, "'")));
      }
      out_ << absl::StrFormat("wrote %s (%d entries)\n", options_.svg,
                              selection.size());
    }
    return kExitOk;
  }

  int TaxonomyExport() {
    nlohmann::ordered_json document;
    document["taxonomy"] = LoadRegistry().ToJson();
    out_ << document.dump(2) << "\n";
    return kExitOk;
  }

 private:
  LoadedConfig Load() {
    LoadedConfig loaded = Unwrap(LoadConfigFile(options_.config));
    hash_ = loaded.hash;
    return loaded;
  }

  GameConfig LoadGame() {
    LoadedConfig loaded = Load();
    if (loaded.kind != ConfigKind::kGame) {
      Check(absl::InvalidArgumentError(absl::StrCat(
          "expected a game config, got ", ConfigKindName(loaded.kind))));
    }
    return *loaded.game;
  }

  AttackRegistry LoadRegistry() {
    if (options_.config.empty()) return BuiltinRegistry();
    LoadedConfig loaded = Load();
    if (loaded.kind != ConfigKind::kTaxonomy) {
      Check(absl::InvalidArgumentError(absl::StrCat(
          "expected a taxonomy config, got ", ConfigKindName(loaded.kind))));
    }
    return *loaded.taxonomy;
  }

  RunRecord Record(std::string mode, nlohmann::ordered_json result,
                   std::string hash = "") {
    RunRecord record;
    record.config_hash = hash.empty() ? hash_ : std::move(hash);
    record.timestamp = CurrentTimestamp();
    record.mode = std::move(mode);
    record.seed = options_.seed;
    record.result = std::move(result);
    if (!options_.no_log) Check(AppendRunRecord(options_.out, record));
    return record;
  }

  const Options& options_;
  std::ostream& out_;
  std::string hash_;
};

}  // namespace

int RunCli(int argc, const char* const* argv, std::ostream& out,
           std::ostream& err) {
  Options options;
  options.threads =
      static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));

  CLI::App app{"Reconstruction-robustness games, exact audits and attack "
               "taxonomy tools.",
               "rerolab"};
  app.require_subcommand(1);
  app.set_version_flag("--version", kToolVersion);

  const auto add_config = [&](CLI::App* cmd, bool required) {
    CLI::Option* opt =
        cmd->add_option("--config", options.config, "JSON config file");
    if (required) opt->required();
  };
  const auto add_json = [&](CLI::App* cmd) {
    cmd->add_flag("--json", options.json, "Print JSON instead of text");
  };
  const auto add_log = [&](CLI::App* cmd) {
    cmd->add_option("--out", options.out, "JSONL run log to append to")
        ->capture_default_str();
    cmd->add_flag("--no-log", options.no_log, "Do not append to the run log");
    cmd->add_option("--seed", options.seed, "Master seed")
        ->capture_default_str();
  };
  const auto add_threads = [&](CLI::App* cmd) {
    cmd->add_option("--threads", options.threads, "Worker threads")
        ->check(CLI::PositiveNumber);
  };

  CLI::App* baseline =
      app.add_subcommand("baseline", "Oblivious baselines kappa and kappa_bar");
  add_config(baseline, true);
  add_json(baseline);

  CLI::App* estimate =
      app.add_subcommand("estimate", "Monte Carlo estimate of gamma");
  add_config(estimate, true);
  add_json(estimate);
  add_log(estimate);
  add_threads(estimate);
  estimate->add_option("--trials", options.trials, "Number of trials")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  estimate->add_option("--confidence", options.confidence,
                       "Clopper-Pearson confidence level")
      ->check(CLI::Range(0.0, 1.0))
      ->capture_default_str();

  CLI::App* exact = app.add_subcommand("exact", "Exact gamma by enumeration");
  add_config(exact, true);
  add_json(exact);
  add_log(exact);

  CLI::App* audit =
      app.add_subcommand("audit", "Audit DP and transfer bounds over a grid");
  add_config(audit, true);
  add_json(audit);
  add_log(audit);
  add_threads(audit);

  CLI::App* separation = app.add_subcommand(
      "separation", "Separation experiment on {0,1}^k with n records");
  separation->add_option("--k", options.k, "Record length in bits")
      ->check(CLI::Range(1, 24))
      ->capture_default_str();
  separation->add_option("--n", options.n, "Dataset size")
      ->check(CLI::Range(2, 64))
      ->capture_default_str();
  add_json(separation);
  add_log(separation);

  CLI::App* measure = app.add_subcommand(
      "measure-epsilon", "Exact epsilon of a mechanism by neighbor pairs");
  add_config(measure, true);
  add_json(measure);
  add_log(measure);

  CLI::App* taxonomy = app.add_subcommand("taxonomy", "Attack taxonomy tools");
  taxonomy->require_subcommand(1);
  CLI::App* validate =
      taxonomy->add_subcommand("validate", "Validate a registry");
  add_config(validate, false);
  add_json(validate);
  CLI::App* list = taxonomy->add_subcommand("list", "List registry entries");
  add_config(list, false);
  add_json(list);
  CLI::App* render = taxonomy->add_subcommand(
      "render", "Parallel-coordinates SVG of selected entries");
  add_config(render, false);
  render->add_option("--names", options.names, "Entry names")
      ->delimiter(',');
  render->add_option("--group", options.group, "Add every entry of a group");
  render->add_option("--svg", options.svg, "Output file (default stdout)");
  CLI::App* exporter =
      taxonomy->add_subcommand("export", "Print the registry as a config");
  add_config(exporter, false);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  Commands commands(options, out);
  try {
    if (*baseline) return commands.Baseline();
    if (*estimate) return commands.Estimate();
    if (*exact) return commands.Exact();
    if (*audit) return commands.Audit();
    if (*separation) return commands.Separation();
    if (*measure) return commands.MeasureEps();
    if (*validate) return commands.TaxonomyValidate();
    if (*list) return commands.TaxonomyList();
    if (*render) return commands.TaxonomyRender();
    if (*exporter) return commands.TaxonomyExport();
  } catch (const CommandError& e) {
    err << "error: " << e.status().message() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace rerolab
