// Copyright 2026 The fedbco Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// fedbco: run, sweep, fit and verify.
//
// Exit codes: 0 success, 1 failed runs or checks, 2 parse/schema/usage
// errors, 3 invariant violations (bad configuration, divergence).

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "fedbco/errors.h"
#include "fedbco/harness.h"
#include "fedbco/simulator.h"

namespace {

constexpr int kExitFailed = 1;
constexpr int kExitParse = 2;
constexpr int kExitInvariant = 3;

int CmdRun(const std::string& path, const std::string& ledger_path) {
  const fedbco::RunConfig config = fedbco::LoadRunConfig(path);
  const fedbco::RegretLedger ledger = fedbco::Run(config);
  fedbco::AppendLedgerRecord(ledger, ledger_path);
  double consensus_max = 0.0;
  for (double v : ledger.consensus) consensus_max = std::max(consensus_max, v);
  std::printf("algorithm        %s\n", fedbco::ToString(config.algorithm).c_str());
  std::printf("schedule         %s (%s)\n",
              fedbco::ToString(ledger.schedule.source).c_str(),
              ledger.schedule.note.c_str());
  std::printf("eta              %.17g\n", ledger.schedule.eta);
  std::printf("delta            %.17g\n", ledger.schedule.delta);
  std::printf("avg_regret       %.17g\n", ledger.avg_regret);
  std::printf("fstar            %.17g\n", ledger.fstar);
  std::printf("consensus_mean   %.17g\n", ledger.ConsensusMean());
  std::printf("consensus_max    %.17g\n", consensus_max);
  if (!ledger.comparator_certified) {
    std::printf("warning: comparator not certified by probes\n");
  }
  return 0;
}

int CmdSweep(const std::string& path, const std::string& out_override,
             const std::string& json_override) {
  fedbco::SweepSpec spec = fedbco::LoadSweepSpec(path);
  if (!out_override.empty()) spec.output_path = out_override;
  if (!json_override.empty()) spec.json_path = json_override;
  const std::vector<fedbco::RunConfig> runs = fedbco::ExpandSweep(spec);
  const int threads = fedbco::WorkerCount();
  std::fprintf(stderr, "sweep: %zu runs on %d worker(s)\n", runs.size(),
               threads);
  const std::vector<fedbco::SweepRow> rows = fedbco::RunSweep(runs, threads);
  std::ofstream csv(spec.output_path);
  if (!csv) throw std::runtime_error("cannot write " + spec.output_path);
  fedbco::WriteSweepCsv(rows, csv);
  if (!spec.json_path.empty()) {
    std::ofstream json(spec.json_path);
    if (!json) throw std::runtime_error("cannot write " + spec.json_path);
    fedbco::WriteSweepJson(rows, json);
  }
  long failed = 0;
  for (const fedbco::SweepRow& r : rows) {
    if (r.status != "ok" && r.status != "uncertified") ++failed;
  }
  std::printf("wrote %zu rows to %s (%ld failed)\n", rows.size(),
              spec.output_path.c_str(), failed);
  return failed == 0 ? 0 : kExitFailed;
}

int CmdFit(const std::string& path, const std::string& x,
           const std::string& y, const std::string& group) {
  std::ifstream in(path);
  if (!in) {
    std::fprintf(stderr, "error: cannot open %s\n", path.c_str());
    return kExitParse;
  }
  fedbco::GroupedFit result;
  try {
    result = fedbco::FitCsv(in, x, y, group);
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitParse;
  }
  for (const std::string& w : result.warnings) {
    std::fprintf(stderr, "warning: %s\n", w.c_str());
  }
  std::printf("%s,slope,intercept,r_squared,n_points\n",
              group.empty() ? "group" : group.c_str());
  for (const auto& [name, fit] : result.fits) {
    std::printf("%s,%.10g,%.10g,%.6f,%d\n", name.empty() ? "all" : name.c_str(),
                fit.slope, fit.intercept, fit.r_squared, fit.n_points);
  }
  return 0;
}

int CmdVerify() {
  const std::vector<fedbco::VerifyCheck> checks = fedbco::RunVerify();
  int failed = 0;
  for (const fedbco::VerifyCheck& c : checks) {
    std::printf("%s %-32s %s\n", c.passed ? "PASS" : "FAIL", c.name.c_str(),
                c.detail.c_str());
    if (!c.passed) ++failed;
  }
  std::printf("%d/%zu checks passed\n", static_cast<int>(checks.size()) - failed,
              checks.size());
  return failed == 0 ? 0 : kExitFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Federated online optimization with bandit feedback"};
  app.require_subcommand(1);

  std::string run_file;
  std::string ledger_path = "ledger.jsonl";
  CLI::App* run = app.add_subcommand("run", "execute one configured run");
  run->add_option("file", run_file, "run configuration")->required();
  run->add_option("--ledger", ledger_path, "JSONL file for the ledger record");

  std::string sweep_file;
  std::string sweep_out;
  std::string sweep_json;
  CLI::App* sweep = app.add_subcommand("sweep", "execute a parameter sweep");
  sweep->add_option("file", sweep_file, "sweep specification")->required();
  sweep->add_option("--out", sweep_out, "CSV output path");
  sweep->add_option("--json", sweep_json, "JSON mirror path");

  std::string fit_csv;
  std::string fit_x;
  std::string fit_y;
  std::string fit_group;
  CLI::App* fit = app.add_subcommand("fit", "log-log slope fit of a CSV");
  fit->add_option("csv", fit_csv, "sweep CSV")->required();
  fit->add_option("--x", fit_x, "x column")->required();
  fit->add_option("--y", fit_y, "y column")->required();
  fit->add_option("--group", fit_group, "grouping column");

  CLI::App* verify = app.add_subcommand("verify", "run the oracle suite");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitParse;
  }

  try {
    if (*run) return CmdRun(run_file, ledger_path);
    if (*sweep) return CmdSweep(sweep_file, sweep_out, sweep_json);
    if (*fit) return CmdFit(fit_csv, fit_x, fit_y, fit_group);
    if (*verify) return CmdVerify();
  } catch (const fedbco::ParseError& e) {
    std::fprintf(stderr, "parse error: %s\n", e.what());
    return kExitParse;
  } catch (const fedbco::ConfigError& e) {
    std::fprintf(stderr, "invalid configuration: %s\n", e.what());
    return kExitInvariant;
  } catch (const fedbco::DivergenceError& e) {
    std::fprintf(stderr, "run diverged at round %ld: %s\n", e.round(),
                 e.what());
    return kExitInvariant;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitFailed;
  }
  return kExitFailed;
}
