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

// Acceptance suite: one PASS/FAIL line per criterion A1-A10. Every run is
// audited when it finishes and replayed at the end for the determinism
// check. Exits nonzero if any criterion fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <string>
#include <vector>

#include "fedbco/harness.h"
#include "fedbco/simulator.h"

namespace fedbco {
namespace {

constexpr std::uint64_t kSeedBase = 1000;

struct Recorded {
  RunConfig config;
  std::uint64_t fingerprint;
};

// Every run of the suite, for the replay check.
std::vector<Recorded> g_runs;
long g_audit_failures = 0;
double g_worst_audit_gap = 0.0;

struct Outcome {
  double avg_regret;
  double consensus_mean;
  double max_step_norm;
  double eta;
};

Outcome Execute(const RunConfig& config) {
  const RegretLedger ledger = Run(config);
  const AuditReport audit = AuditLedger(ledger, 1e-10);
  if (!audit.ok) {
    ++g_audit_failures;
    std::printf("  info audit failure: %s\n", audit.message.c_str());
  }
  g_worst_audit_gap = std::max(
      g_worst_audit_gap, std::abs(audit.recomputed_avg_regret - ledger.avg_regret));
  g_runs.push_back({config, LedgerFingerprint(ledger)});
  return {ledger.avg_regret, ledger.ConsensusMean(), ledger.max_step_norm,
          ledger.schedule.eta};
}

double MeanRegret(RunConfig config, int seeds) {
  double total = 0.0;
  for (int i = 0; i < seeds; ++i) {
    config.seed = kSeedBase + i;
    total += Execute(config).avg_regret;
  }
  return total / seeds;
}

class Stopwatch {
 public:
  Stopwatch() : start_(std::chrono::steady_clock::now()) {}
  double Seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                         start_)
        .count();
  }

 private:
  std::chrono::steady_clock::time_point start_;
};

int g_failed = 0;

void Report(const char* id, bool metric_ok, const std::string& detail,
            double seconds, double budget) {
  const bool ok = metric_ok && seconds <= budget;
  if (!ok) ++g_failed;
  std::printf("%s %s %s [%.1f s, budget %.0f s]\n", id, ok ? "PASS" : "FAIL",
              detail.c_str(), seconds, budget);
  std::fflush(stdout);
}

std::string Format(const char* fmt, double a, double b = 0.0, double c = 0.0,
                   double d = 0.0) {
  char buf[256];
  std::snprintf(buf, sizeof(buf), fmt, a, b, c, d);
  return buf;
}

void A1() {
  const Stopwatch w;
  int failed = 0;
  std::size_t total = 0;
  for (const VerifyCheck& c : RunVerify()) {
    ++total;
    if (!c.passed) {
      ++failed;
      std::printf("  info A1 failed check %s: %s\n", c.name.c_str(),
                  c.detail.c_str());
    }
  }
  Report("A1", failed == 0,
         Format("verify: %.0f/%.0f checks passed", total - failed, total),
         w.Seconds(), 300);
}

// Slope of mean regret against T over 2^8..2^14.
void HorizonExponent(const char* id, RunConfig base, int seeds, double budget) {
  const Stopwatch w;
  std::vector<double> xs;
  std::vector<double> ys;
  for (int e = 8; e <= 14; ++e) {
    const long t = 1L << e;
    base.rounds = t / base.local_steps;
    xs.push_back(static_cast<double>(t));
    ys.push_back(MeanRegret(base, seeds));
  }
  const FitResult fit = FitLogLog(xs, ys);
  const bool ok = fit.slope >= -0.60 && fit.slope <= -0.40 && fit.r_squared >= 0.98;
  Report(id, ok,
         Format("slope %.4f in [-0.60, -0.40], r^2 %.4f >= 0.98", fit.slope,
                fit.r_squared),
         w.Seconds(), budget);
}

void A2() {
  RunConfig c;
  c.dim = 8;
  c.algorithm = Algorithm::kNcOgd;
  c.adversary.kind = AdversaryKind::kStochasticLinear;
  HorizonExponent("A2", c, 8, 120);
}

void A3() {
  const Stopwatch w;
  std::vector<double> regrets;
  for (int m : {1, 4, 16}) {
    RunConfig c;
    c.machines = m;
    c.rounds = 4096;
    c.dim = 8;
    c.algorithm = Algorithm::kNcOgd;
    c.adversary.kind = AdversaryKind::kStochasticLinear;
    regrets.push_back(MeanRegret(c, 8));
  }
  const double lo = *std::min_element(regrets.begin(), regrets.end());
  const double hi = *std::max_element(regrets.begin(), regrets.end());
  const double spread = (hi - lo) / lo;
  Report("A3", spread <= 0.15,
         Format("regret M=1,4,16: %.5f %.5f %.5f; spread %.4f <= 0.15",
                regrets[0], regrets[1], regrets[2], spread),
         w.Seconds(), 180);
}

void A4() {
  RunConfig c;
  c.machines = 4;
  c.dim = 64;
  c.algorithm = Algorithm::kFedOsgd;
  c.adversary.kind = AdversaryKind::kStochasticLinear;
  HorizonExponent("A4", c, 8, 240);
}

void A5() {
  const Stopwatch w;
  std::vector<double> ms;
  std::vector<double> regrets;
  for (int m : {1, 4, 16}) {
    RunConfig c;
    c.machines = m;
    c.rounds = 4096;
    c.dim = 256;
    c.algorithm = Algorithm::kFedOsgd;
    c.adversary.kind = AdversaryKind::kAdaptiveLinear;
    ms.push_back(m);
    regrets.push_back(MeanRegret(c, 16));
  }
  const FitResult fit = FitLogLog(ms, regrets);
  Report("A5", fit.slope >= -0.65 && fit.slope <= -0.35,
         Format("regret M=1,4,16: %.4f %.4f %.4f; slope %.4f in [-0.65, -0.35]",
                regrets[0], regrets[1], regrets[2], fit.slope),
         w.Seconds(), 360);
}

void A6() {
  const Stopwatch w;
  int wins = 0;
  double fed_total = 0.0;
  double nc_total = 0.0;
  for (int i = 0; i < 16; ++i) {
    RunConfig c;
    c.machines = 4;
    c.local_steps = 2;
    c.rounds = 512;
    c.dim = 1024;
    c.adversary.kind = AdversaryKind::kStochasticLinear;
    c.adversary.mean_scale = 0.5;
    c.seed = kSeedBase + i;
    c.algorithm = Algorithm::kFedOsgd;
    const double fed = Execute(c).avg_regret;
    c.algorithm = Algorithm::kNcOgdTwoPoint;
    const double nc = Execute(c).avg_regret;
    wins += fed < nc;
    fed_total += fed;
    nc_total += nc;
  }
  Report("A6", wins >= 14,
         Format("FedOSGD below baseline on %.0f/16 seeds >= 14 (means %.4f vs "
                "%.4f)",
                wins, fed_total / 16, nc_total / 16),
         w.Seconds(), 300);
}

void A7() {
  const Stopwatch w;
  std::vector<double> regrets;
  double worst_ratio = 0.0;
  for (int m : {1, 4}) {
    double total = 0.0;
    for (int i = 0; i < 16; ++i) {
      RunConfig c;
      c.machines = m;
      c.rounds = 4096;
      c.dim = 256;
      c.algorithm = Algorithm::kFedPosgd;
      c.adversary.kind = AdversaryKind::kAdaptiveLinear;
      c.seed = kSeedBase + i;
      const Outcome o = Execute(c);
      total += o.avg_regret;
      worst_ratio = std::max(
          worst_ratio, o.max_step_norm / (2.0 * c.dim * c.lipschitz_g));
    }
    regrets.push_back(total / 16);
  }
  const bool ok = regrets[1] < regrets[0] && worst_ratio <= 1.0 + 1e-12;
  Report("A7", ok,
         Format("regret M=1 %.4f > M=4 %.4f; max |g| / 2dG = %.4f <= 1",
                regrets[0], regrets[1], worst_ratio),
         w.Seconds(), 300);
}

RunConfig A8Config(double zeta) {
  RunConfig c;
  c.machines = 4;
  c.local_steps = 8;
  c.rounds = 256;
  c.dim = 64;
  c.zeta = zeta;
  c.algorithm = Algorithm::kFedOsgd;
  c.adversary.kind = AdversaryKind::kAdaptiveLinear;
  c.schedule.mode = ScheduleMode::kSmooth;
  return c;
}

void A8() {
  const Stopwatch w;
  const double homogeneous = MeanRegret(A8Config(0.0), 16);
  const double heterogeneous = MeanRegret(A8Config(1.0), 16);
  const double seconds = w.Seconds();
  Report("A8", homogeneous <= heterogeneous,
         Format("regret zeta=0 %.4f <= zeta=G %.4f", homogeneous,
                heterogeneous),
         seconds, 240);
  // Other adversaries, for context only; not part of the criterion.
  for (AdversaryKind kind :
       {AdversaryKind::kStochasticLinear, AdversaryKind::kAdaptiveLinear}) {
    RunConfig a = A8Config(0.0);
    RunConfig b = A8Config(1.0);
    a.retain_trail = b.retain_trail = false;
    a.adversary.kind = b.adversary.kind = kind;
    if (kind == AdversaryKind::kAdaptiveLinear) {
      a.adversary.targeting = b.adversary.targeting =
          TargetingRule::kMeanAndDeviation;
    }
    double ra = 0.0;
    double rb = 0.0;
    for (int i = 0; i < 16; ++i) {
      a.seed = b.seed = kSeedBase + i;
      ra += Run(a).avg_regret / 16;
      rb += Run(b).avg_regret / 16;
    }
    std::printf("  info A8 %s%s: zeta=0 %.4f, zeta=G %.4f\n",
                ToString(kind).c_str(),
                kind == AdversaryKind::kAdaptiveLinear ? " (mean_and_deviation)"
                                                       : "",
                ra, rb);
  }
}

void A9() {
  const Stopwatch w;
  double worst = 0.0;
  for (double zeta : {0.0, 0.5}) {
    for (int k : {4, 16}) {
      for (int i = 0; i < 8; ++i) {
        RunConfig c;
        c.machines = 4;
        c.local_steps = k;
        c.rounds = 64;
        c.dim = 8;
        c.zeta = zeta;
        c.sigma = 1.0;
        c.algorithm = Algorithm::kFedOsgdFirstOrder;
        c.adversary.kind = AdversaryKind::kStochasticLinear;
        c.seed = kSeedBase + i;
        const Outcome o = Execute(c);
        const double bound =
            1.5 * 2.0 * o.eta * (c.sigma * std::sqrt(k) + zeta * k);
        worst = std::max(worst, o.consensus_mean / bound);
      }
    }
  }
  Report("A9", worst <= 1.0,
         Format("max consensus / (1.5 * 2 eta (sigma sqrt K + zeta K)) = %.4f "
                "<= 1 over 32 runs",
                worst),
         w.Seconds(), 180);
}

void A10() {
  const Stopwatch w;
  long mismatches = 0;
  for (const Recorded& r : g_runs) {
    if (LedgerFingerprint(Run(r.config)) != r.fingerprint) ++mismatches;
  }
  Report("A10", mismatches == 0 && g_audit_failures == 0,
         Format("%.0f runs replayed, %.0f fingerprint mismatches, %.0f audit "
                "failures, worst audit gap %.3g",
                static_cast<double>(g_runs.size()),
                static_cast<double>(mismatches),
                static_cast<double>(g_audit_failures), g_worst_audit_gap),
         w.Seconds(), 1e9);
}

}  // namespace
}  // namespace fedbco

int main() {
  using namespace fedbco;
  A1();
  A2();
  A3();
  A4();
  A5();
  A6();
  A7();
  A8();
  A9();
  A10();
  std::printf("%d criteria failed\n", g_failed);
  return g_failed == 0 ? 0 : 1;
}
