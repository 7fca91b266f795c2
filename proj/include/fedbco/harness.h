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

#ifndef FEDBCO_HARNESS_H_
#define FEDBCO_HARNESS_H_

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "fedbco/estimators.h"
#include "fedbco/simulator.h"

namespace fedbco {

// -- Configuration ------------------------------------------------------------
//
// INI text. Required top-level keys: machines, local_steps, rounds, dim,
// lipschitz_g, radius_b, algorithm, adversary, seed. Optional: zeta (0),
// schedule (auto), oracle, sigma, smooth_h, retain_trail.
//
// `adversary` and `schedule` take either a plain name or a section:
//
//   [adversary]
//   kind = adaptive_linear
//   mean_scale = 0.0
//   targeting = mean_iterate
//
//   [schedule]
//   name = manual
//   eta = 0.01
//   delta = 0.5
//   fstar = 0.2
//
// Sweep files add a [sweep] section, see ParseSweepSpec.

// Throws ParseError (with the offending line when known) on malformed text,
// unknown keys or missing required keys.
RunConfig ParseRunConfig(const std::string& text);
RunConfig LoadRunConfig(const std::string& path);

// Single JSON object (one line) describing a finished run.
std::string LedgerRecord(const RegretLedger& ledger);
// Appends LedgerRecord and a newline to `path`.
void AppendLedgerRecord(const RegretLedger& ledger, const std::string& path);

// -- Sweeps -------------------------------------------------------------------

// Cartesian product over the non-empty axes, `replicates` seeds per point.
// A horizon entry sets R = T / K.
struct SweepSpec {
  RunConfig base;
  std::vector<long> horizon;
  std::vector<int> local_steps;
  std::vector<long> rounds;
  std::vector<int> machines;
  std::vector<std::size_t> dim;
  std::vector<double> zeta;
  std::vector<Algorithm> algorithm;
  std::vector<std::uint64_t> seed;
  int replicates = 1;
  long cap = 10000;
  std::string output_path = "sweep.csv";
  // Optional JSON mirror of the CSV rows.
  std::string json_path;
};

// Base keys as in ParseRunConfig plus
//
//   [sweep]
//   horizon = 256, 512, 1024
//   machines = 1, 4
//   replicates = 8
//   cap = 10000
//   output = results.csv
//   json = results.json
SweepSpec ParseSweepSpec(const std::string& text);
SweepSpec LoadSweepSpec(const std::string& path);

// Expanded run list in run_id order; replicate r of a point uses seed
// base + r. Throws ParseError if the product exceeds the cap or a point
// violates T = K R.
std::vector<RunConfig> ExpandSweep(const SweepSpec& spec);

struct SweepRow {
  long run_id = 0;
  RunConfig config;
  double eta = 0.0;
  double delta = 0.0;
  double avg_regret = 0.0;
  double consensus_mean = 0.0;
  double fstar = 0.0;
  double comparator_loss = 0.0;  // (1/M) sum_{t,m} f_t^m(x*)
  double wall_ms = 0.0;
  std::string status = "ok";
};

// The frozen CSV header.
extern const char kSweepCsvHeader[];

std::string CsvRow(const SweepRow& row);
void WriteSweepCsv(const std::vector<SweepRow>& rows, std::ostream& out);
void WriteSweepJson(const std::vector<SweepRow>& rows, std::ostream& out);

// Worker count: FEDBCO_THREADS if set and positive, else the hardware
// concurrency.
int WorkerCount();

// Runs every config, `threads` at a time. Rows come back in run_id order and
// do not depend on `threads`. Failed runs carry a non-"ok" status.
std::vector<SweepRow> RunSweep(const std::vector<RunConfig>& runs,
                               int threads);

// -- Log-log fits -------------------------------------------------------------

struct FitResult {
  double slope = 0.0;
  double intercept = 0.0;
  double r_squared = 0.0;
  int n_points = 0;
};

// OLS of log y on log x. Requires >= 2 points with x, y > 0.
FitResult FitLogLog(const std::vector<double>& xs,
                    const std::vector<double>& ys);

struct GroupedFit {
  std::map<std::string, FitResult> fits;
  std::vector<std::string> warnings;
};

// Reads a CSV with a header row. Rows with a status column other than "ok"
// and rows with nonpositive y are skipped (the latter with a warning).
// Replicates at the same x are averaged before the log transform. Throws
// std::runtime_error for unknown columns or groups with fewer than 3
// distinct x values.
GroupedFit FitCsv(std::istream& csv, const std::string& x_column,
                  const std::string& y_column,
                  const std::string& group_column = "");

// -- Verify suite -------------------------------------------------------------

using OnePointFn = std::function<ZoQuery(const CostFunction&, VecView, double,
                                         RngStream&)>;
using TwoPointFn = OnePointFn;

struct VerifyOptions {
  OnePointFn one_point = OnePointEstimate;
  TwoPointFn two_point = TwoPointEstimate;
  long sphere_samples = 1000000;
  long estimator_samples = 200000;
  long potential_pairs = 100000;
  std::uint64_t seed = 20260101;
};

struct VerifyCheck {
  std::string name;
  bool passed = false;
  double observed = 0.0;
  double bound = 0.0;
  std::string detail;
};

std::vector<VerifyCheck> RunVerify(const VerifyOptions& options = {});

}  // namespace fedbco

#endif  // FEDBCO_HARNESS_H_
