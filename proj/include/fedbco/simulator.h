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

#ifndef FEDBCO_SIMULATOR_H_
#define FEDBCO_SIMULATOR_H_

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "fedbco/adversaries.h"
#include "fedbco/algorithms.h"
#include "fedbco/oracles.h"
#include "fedbco/schedules.h"
#include "fedbco/vecgeom.h"

namespace fedbco {

// How the step size of a run is chosen.
enum class ScheduleMode {
  kAuto,  // the natural rule for the configured algorithm
  kOnePoint,
  kOnePointAlt,
  kTwoPoint,
  kTwoPointSmooth,
  kFirstOrder,
  kSmooth,
  kManual,
};

std::string ToString(ScheduleMode mode);
ScheduleMode ParseScheduleMode(const std::string& name);

struct ScheduleRequest {
  ScheduleMode mode = ScheduleMode::kAuto;
  double eta = 0.0;    // kManual only
  double delta = 0.0;  // kManual only
  // F* for the smooth-case rule. When absent and H > 0, a pilot run
  // estimates it.
  std::optional<double> fstar;
};

// Full description of one experiment. T = K R.
struct RunConfig {
  int machines = 1;
  int local_steps = 1;
  long rounds = 1;
  std::size_t dim = 1;
  double lipschitz_g = 1.0;
  double radius_b = 1.0;
  double zeta = 0.0;
  Algorithm algorithm = Algorithm::kNcOgd;
  // When set, must match the algorithm's oracle.
  std::optional<OracleKind> oracle;
  // Noise level of the noisy first-order oracle.
  double sigma = 0.0;
  // Smoothness used by the smooth-case schedules (0 for linear costs).
  double smooth_h = 0.0;
  // Kind-specific adversary fields; dim, machines, G and zeta are copied
  // from the fields above.
  AdversarySpec adversary;
  ScheduleRequest schedule;
  std::uint64_t seed = 0;
  // Keep every emitted function and queried point for the audit. Without
  // it, linear runs keep sufficient statistics and oblivious runs replay the
  // adversary for the comparator.
  bool retain_trail = true;
  // Give every machine the same random stream (test knob).
  bool shared_machine_streams = false;

  long horizon() const { return static_cast<long>(local_steps) * rounds; }
  AdversarySpec ResolvedAdversary() const;
};

// Throws ConfigError describing the first violated invariant.
void Validate(const RunConfig& config);

// Concrete (eta, delta) for a configuration. May run a pilot pass to
// estimate F* (smooth-case rule with H > 0 and no F* supplied).
Schedule ResolveSchedule(const RunConfig& config);

// Per-run record of losses at queried points, the hindsight comparator and
// consensus diagnostics. Loss entry (t, m, j) sits at ((t M) + m) q + j.
struct RegretLedger {
  RunConfig config;
  Schedule schedule;
  int queries_per_round = 1;

  std::vector<double> losses;
  // Same indexing as `losses`; empty unless the trail is retained.
  std::vector<Vec> query_points;
  // functions[t][m]; empty unless the trail is retained.
  std::vector<std::vector<CostFunction>> functions;
  // (1/M) sum_m |x_t^m - mean_t| for the iterates played at round t.
  std::vector<double> consensus;

  Vec comparator;
  // sum_{t,m} f_t^m(x*).
  double comparator_total = 0.0;
  // (1/T) sum_t f_t(x*) with f_t the machine average.
  double fstar = 0.0;
  double incurred_total = 0.0;
  // (incurred - q * comparator_total) / (q M T).
  double avg_regret = 0.0;
  bool comparator_certified = true;
  std::string comparator_method;

  long communications = 0;
  double max_step_norm = 0.0;
  double realized_zeta = 0.0;
  std::vector<Vec> final_iterates;
  // Per-machine incurred totals (sum over t, j).
  std::vector<double> machine_incurred;
  // Per-machine coefficient sums sum_t beta_t^m; filled for linear runs.
  std::vector<Vec> machine_linear_sums;

  double ConsensusMean() const;
  long LossCount() const { return static_cast<long>(losses.size()); }
};

// Executes T = K R rounds. Throws ConfigError before round 0 on invalid
// configuration and DivergenceError on a non-finite iterate.
RegretLedger Run(const RunConfig& config);
// Same with an already resolved schedule.
RegretLedger RunWithSchedule(const RunConfig& config,
                             const Schedule& schedule);

// -- Comparators --------------------------------------------------------------

// Read-only access to every (t, m) function of a run.
class FunctionSource {
 public:
  virtual ~FunctionSource() = default;
  virtual long rounds() const = 0;
  virtual std::size_t dim() const = 0;
  virtual void ForEachRound(
      const std::function<void(long, const std::vector<CostFunction>&)>& visit)
      const = 0;
};

// Functions held in memory.
class StoredFunctions : public FunctionSource {
 public:
  explicit StoredFunctions(std::span<const std::vector<CostFunction>> rounds)
      : rounds_(rounds) {}
  long rounds() const override { return static_cast<long>(rounds_.size()); }
  std::size_t dim() const override;
  void ForEachRound(
      const std::function<void(long, const std::vector<CostFunction>&)>& visit)
      const override;

 private:
  std::span<const std::vector<CostFunction>> rounds_;
};

// Functions re-emitted from an oblivious adversary.
class ReplayedFunctions : public FunctionSource {
 public:
  ReplayedFunctions(const Adversary& adversary, long rounds)
      : adversary_(adversary), rounds_(rounds) {}
  long rounds() const override { return rounds_; }
  std::size_t dim() const override { return adversary_.spec().dim; }
  void ForEachRound(
      const std::function<void(long, const std::vector<CostFunction>&)>& visit)
      const override;

 private:
  const Adversary& adversary_;
  long rounds_;
};

// Only machine `machine` of every round.
class MachineFunctions : public FunctionSource {
 public:
  MachineFunctions(const FunctionSource& inner, int machine)
      : inner_(inner), machine_(machine) {}
  long rounds() const override { return inner_.rounds(); }
  std::size_t dim() const override { return inner_.dim(); }
  void ForEachRound(
      const std::function<void(long, const std::vector<CostFunction>&)>& visit)
      const override;

 private:
  const FunctionSource& inner_;
  int machine_;
};

// Sum of every function's value / gradient at x.
double TotalValue(const FunctionSource& source, VecView x);
Vec TotalGradient(const FunctionSource& source, VecView x);
bool AllLinear(const FunctionSource& source);

// x* = -B S/|S| for S = sum_{t,m} beta_t^m, or 0 when S = 0.
Vec ComparatorFromSum(VecView coefficient_sum, double radius);
// Requires every function to be linear; otherwise defers to
// ComparatorConvex.
Vec ComparatorLinear(const FunctionSource& source, double radius);

struct ConvexComparatorOptions {
  // Value tolerance; defaults to 1e-8 G B when <= 0.
  double tol = 0.0;
  int max_iterations = 100000;
  int probes = 1000;
  std::uint64_t probe_seed = 0;
};

struct ComparatorResult {
  Vec x;
  double average_value = 0.0;  // (1/(T M)) sum f_t^m(x)
  bool certified = false;
  int iterations = 0;
};

// Projected gradient descent with backtracking on the averaged objective
// over the ball, certified by random feasible probes.
ComparatorResult ComparatorConvex(const FunctionSource& source, double radius,
                                  const ConvexComparatorOptions& options = {});

// -- Diagnostics --------------------------------------------------------------

// Per-round mean distance to the iterate average.
std::vector<double> ConsensusSeries(const RegretLedger& ledger);

struct AuditReport {
  bool ok = false;
  double recomputed_avg_regret = 0.0;
  double max_loss_mismatch = 0.0;
  long expected_entries = 0;
  long found_entries = 0;
  std::string message;
};

// Independent second pass over stored functions and queried points.
// Requires a retained trail.
AuditReport AuditLedger(const RegretLedger& ledger, double tol = 1e-10);

// (1/(q M T)) sum_m (incurred_m - q min_x sum_t f_t^m(x)): regret of each
// machine against its own hindsight comparator, averaged. Never below the
// shared-comparator regret.
double PerMachineComparatorRegret(const RegretLedger& ledger);

// 64-bit fingerprint of everything a replay must reproduce bit-for-bit.
std::uint64_t LedgerFingerprint(const RegretLedger& ledger);

}  // namespace fedbco

#endif  // FEDBCO_SIMULATOR_H_
