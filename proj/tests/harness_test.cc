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

#include "fedbco/harness.h"

#include <cmath>
#include <sstream>
#include <string>
#include <vector>

#include "doctest.h"
#include "fedbco/errors.h"
#include "json.hpp"

namespace fedbco {
namespace {

constexpr char kMinimal[] = R"(machines = 1
local_steps = 1
rounds = 16
dim = 2
lipschitz_g = 1
radius_b = 1
algorithm = ncogd
adversary = stochastic_linear
seed = 7
)";

int ParseErrorLine(const std::string& text) {
  try {
    ParseRunConfig(text);
  } catch (const ParseError& e) {
    return e.line();
  }
  return -1;
}

TEST_CASE("minimal config parses with defaults") {
  const RunConfig c = ParseRunConfig(kMinimal);
  CHECK(c.machines == 1);
  CHECK(c.rounds == 16);
  CHECK(c.dim == 2);
  CHECK(c.zeta == 0.0);
  CHECK(c.algorithm == Algorithm::kNcOgd);
  CHECK(c.adversary.kind == AdversaryKind::kStochasticLinear);
  CHECK(c.schedule.mode == ScheduleMode::kAuto);
  CHECK(c.seed == 7);
  CHECK(Run(c).avg_regret == Run(ParseRunConfig(kMinimal)).avg_regret);
}

TEST_CASE("sections for adversary and schedule") {
  const std::string text = std::string(kMinimal).replace(
                               std::string(kMinimal).find("adversary"),
                               std::string("adversary = stochastic_linear\n").size(),
                               "") +
                           "zeta = 0.5\n"
                           "[adversary]\nkind = adaptive_linear\n"
                           "targeting = mean_and_deviation\n"
                           "[schedule]\nname = manual\neta = 0.01\ndelta = 0.2\n";
  const RunConfig c = ParseRunConfig(text);
  CHECK(c.adversary.kind == AdversaryKind::kAdaptiveLinear);
  CHECK(c.adversary.targeting == TargetingRule::kMeanAndDeviation);
  CHECK(c.schedule.mode == ScheduleMode::kManual);
  CHECK(c.schedule.eta == 0.01);
  CHECK(c.schedule.delta == 0.2);
  CHECK(c.zeta == 0.5);
}

TEST_CASE("config errors carry line numbers") {
  std::string missing = kMinimal;
  missing.erase(missing.find("radius_b"), std::string("radius_b = 1\n").size());
  CHECK_THROWS_AS(ParseRunConfig(missing), ParseError);

  CHECK(ParseErrorLine("machines = two\n" + std::string(kMinimal).substr(13)) ==
        1);
  CHECK(ParseErrorLine(std::string(kMinimal) + "colour = blue\n") == 10);
  CHECK(ParseErrorLine(std::string(kMinimal) + "schedule = bogus\n") == 10);
  CHECK(ParseErrorLine(std::string(kMinimal) + "retain_trail = maybe\n") == 10);
  CHECK_THROWS_AS(ParseRunConfig(std::string(kMinimal) + "[broken\n"),
                  ParseError);
  // Semantically invalid but well-formed text parses; the run rejects it.
  const RunConfig bad =
      ParseRunConfig(std::string(kMinimal) + "oracle = one_point\n");
  CHECK_THROWS_AS(Run(bad), ConfigError);
}

TEST_CASE("ledger record is one JSON line") {
  const RegretLedger l = Run(ParseRunConfig(kMinimal));
  const std::string rec = LedgerRecord(l);
  CHECK(rec.find('\n') == std::string::npos);
  const auto j = nlohmann::json::parse(rec);
  CHECK(j["avg_regret"].get<double>() == l.avg_regret);
  CHECK(j["loss_entries"].get<long>() == 16);
}

std::string SweepText(const std::string& sweep) {
  return std::string(kMinimal) + "[sweep]\n" + sweep;
}

TEST_CASE("golden CSV header") {
  CHECK(std::string(kSweepCsvHeader) ==
        "run_id,algorithm,adversary,M,K,R,T,d,G,B,zeta,eta,delta,seed,"
        "avg_regret,consensus_mean,fstar,comparator_loss,wall_ms,status");
}

TEST_CASE("sweep expansion") {
  const SweepSpec spec = ParseSweepSpec(
      SweepText("horizon = 256, 512, 1024, 2048, 4096, 16384\nreplicates = 8\n"));
  const std::vector<RunConfig> runs = ExpandSweep(spec);
  CHECK(runs.size() == 48);
  CHECK(runs[0].seed == 7);
  CHECK(runs[7].seed == 14);
  CHECK(runs[8].rounds == 512);
  CHECK(runs.back().horizon() == 16384);

  SweepSpec capped = spec;
  capped.cap = 47;
  CHECK_THROWS_AS(ExpandSweep(capped), ParseError);

  const SweepSpec bad_k = ParseSweepSpec(
      SweepText("horizon = 256, 258\nlocal_steps = 4\n"));
  CHECK_THROWS_AS(ExpandSweep(bad_k), ParseError);

  CHECK_THROWS_AS(ParseSweepSpec(SweepText("horizon = 16\nrounds = 4\n")),
                  ParseError);
  CHECK_THROWS_AS(ParseSweepSpec(SweepText("machines = 1, 0\n")), ParseError);
  CHECK_THROWS_AS(ParseSweepSpec(SweepText("colour = 1\n")), ParseError);

  const SweepSpec multi = ParseSweepSpec(SweepText(
      "algorithm = fedosgd, fedposgd\nmachines = 1, 2, 4\nzeta = 0, 0.5\n"));
  const std::vector<RunConfig> grid = ExpandSweep(multi);
  CHECK(grid.size() == 12);
  CHECK(grid[0].algorithm == Algorithm::kFedOsgd);
  CHECK(grid[1].zeta == 0.5);
  CHECK(grid[2].machines == 2);
}

std::string StripWall(const std::vector<SweepRow>& rows) {
  std::vector<SweepRow> copy = rows;
  for (SweepRow& r : copy) r.wall_ms = 0.0;
  std::ostringstream out;
  WriteSweepCsv(copy, out);
  return out.str();
}

TEST_CASE("sweeps are deterministic and thread independent") {
  const SweepSpec spec = ParseSweepSpec(SweepText(
      "algorithm = fedosgd, fedposgd, ncogd\nmachines = 1, 3\n"
      "horizon = 32, 64\nreplicates = 2\n"));
  const std::vector<RunConfig> runs = ExpandSweep(spec);
  const auto a = RunSweep(runs, 1);
  const auto b = RunSweep(runs, 4);
  CHECK(StripWall(a) == StripWall(b));
  CHECK(StripWall(a) == StripWall(RunSweep(runs, 1)));
  for (const SweepRow& r : a) CHECK(r.status == "ok");

  std::ostringstream json;
  WriteSweepJson(a, json);
  const auto j = nlohmann::json::parse(json.str());
  REQUIRE(j.size() == a.size());
  CHECK(j[3]["avg_regret"].get<double>() == a[3].avg_regret);
  CHECK(j[3]["algorithm"] == ToString(a[3].config.algorithm));
}

TEST_CASE("failed sweep rows carry a status") {
  SweepSpec spec = ParseSweepSpec(SweepText("zeta = 0, 3\n"));
  const auto rows = RunSweep(ExpandSweep(spec), 1);
  CHECK(rows[0].status == "ok");
  CHECK(rows[1].status == "config_error");
  CHECK(std::isnan(rows[1].avg_regret));
}

TEST_CASE("log-log fits") {
  std::vector<double> xs;
  std::vector<double> inv_sqrt;
  std::vector<double> flat;
  std::vector<double> cubic;
  for (double x : {256.0, 512.0, 1024.0, 2048.0, 4096.0}) {
    xs.push_back(x);
    inv_sqrt.push_back(3.0 / std::sqrt(x));
    flat.push_back(0.7);
    cubic.push_back(1e-3 * x * x * x);
  }
  const FitResult a = FitLogLog(xs, inv_sqrt);
  CHECK(std::abs(a.slope + 0.5) <= 1e-12);
  CHECK(a.r_squared == doctest::Approx(1.0));
  CHECK(FitLogLog(xs, flat).slope == doctest::Approx(0.0).scale(1.0));
  CHECK(FitLogLog(xs, flat).r_squared == 1.0);
  CHECK(std::abs(FitLogLog(xs, cubic).slope - 3.0) <= 1e-9);
  CHECK_THROWS_AS(FitLogLog({1.0, 2.0}, {1.0, -1.0}), std::invalid_argument);
}

TEST_CASE("CSV fits average replicates and warn") {
  std::istringstream csv(
      "T,avg_regret,algorithm,status\n"
      "100,0.1,a,ok\n"
      "100,0.3,a,ok\n"
      "400,0.1,a,ok\n"
      "1600,0.05,a,ok\n"
      "1600,-1,a,ok\n"
      "1600,9,a,diverged\n"
      "100,1,b,ok\n"
      "400,0.5,b,ok\n"
      "1600,0.25,b,uncertified\n");
  const GroupedFit fit = FitCsv(csv, "T", "avg_regret", "algorithm");
  REQUIRE(fit.fits.size() == 2);
  // Group a: (100, 0.2), (400, 0.1), (1600, 0.05).
  CHECK(std::abs(fit.fits.at("a").slope + 0.5) <= 1e-12);
  CHECK(std::abs(fit.fits.at("b").slope + 0.5) <= 1e-12);
  CHECK(fit.fits.at("a").n_points == 3);
  REQUIRE(fit.warnings.size() == 1);
  CHECK(fit.warnings[0].find("not positive") != std::string::npos);

  std::istringstream sparse("T,y\n1,1\n2,2\n");
  CHECK_THROWS_AS(FitCsv(sparse, "T", "y"), std::runtime_error);
  std::istringstream unknown("T,y\n1,1\n");
  CHECK_THROWS_AS(FitCsv(unknown, "T", "z"), std::runtime_error);
}

TEST_CASE("verify suite flags a tampered estimator") {
  VerifyOptions o;
  o.sphere_samples = 200000;
  o.estimator_samples = 20000;
  o.potential_pairs = 1000;
  bool saw_unbiased = false;
  for (const VerifyCheck& c : RunVerify(o)) {
    if (c.name.rfind("one_point_unbiased", 0) == 0 ||
        c.name.rfind("two_point", 0) == 0) {
      CHECK_MESSAGE(c.passed, c.name << ": " << c.detail);
      saw_unbiased = true;
    }
  }
  CHECK(saw_unbiased);

  o.one_point = [](const CostFunction& f, VecView w, double delta,
                   RngStream& rng) {
    ZoQuery q = OnePointEstimate(f, w, delta, rng);
    for (double& v : q.estimate) v = -v;
    return q;
  };
  int failed = 0;
  for (const VerifyCheck& c : RunVerify(o)) {
    if (c.name.rfind("one_point_unbiased", 0) == 0) failed += !c.passed;
  }
  CHECK(failed == 3);
}

}  // namespace
}  // namespace fedbco
