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

#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <limits>
#include <ostream>
#include <thread>

#include "json.hpp"

#include "fedbco/errors.h"
#include "fedbco/harness.h"
#include "internal/config_reader.h"

namespace fedbco {
namespace {

std::string FormatReal(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

template <typename T, typename F>
std::vector<T> ReadAxis(const internal::ConfigReader& r,
                        const std::string& key, F convert) {
  std::vector<T> out;
  const std::string path = "sweep." + key;
  if (!r.Has(path)) return out;
  for (const std::string& item : r.List(path)) {
    out.push_back(convert(item, path));
  }
  return out;
}

// Axis values or the base value when the axis is absent.
template <typename T>
std::vector<T> OrBase(const std::vector<T>& axis, T base) {
  return axis.empty() ? std::vector<T>{base} : axis;
}

}  // namespace

const char kSweepCsvHeader[] =
    "run_id,algorithm,adversary,M,K,R,T,d,G,B,zeta,eta,delta,seed,avg_regret,"
    "consensus_mean,fstar,comparator_loss,wall_ms,status";

SweepSpec ParseSweepSpec(const std::string& text) {
  internal::ConfigReader r(text);
  SweepSpec spec;
  spec.base = internal::ReadRunConfig(r);
  auto positive = [&r](const std::string& item, const std::string& path) {
    const long long v = r.ParseInteger(item, path);
    if (v < 1) throw ParseError(path + " entries must be >= 1", r.LineOf(path));
    return v;
  };
  spec.horizon = ReadAxis<long>(r, "horizon", positive);
  spec.local_steps = ReadAxis<int>(r, "local_steps", positive);
  spec.rounds = ReadAxis<long>(r, "rounds", positive);
  spec.machines = ReadAxis<int>(r, "machines", positive);
  spec.dim = ReadAxis<std::size_t>(r, "dim", positive);
  spec.zeta = ReadAxis<double>(
      r, "zeta", [&r](const std::string& item, const std::string& path) {
        return r.ParseReal(item, path);
      });
  spec.algorithm = ReadAxis<Algorithm>(
      r, "algorithm", [&r](const std::string& item, const std::string& path) {
        try {
          return ParseAlgorithm(item);
        } catch (const std::invalid_argument& e) {
          throw ParseError(e.what(), r.LineOf(path));
        }
      });
  spec.seed = ReadAxis<std::uint64_t>(
      r, "seed", [&r](const std::string& item, const std::string& path) {
        return r.ParseUnsigned(item, path);
      });
  if (r.Has("sweep.replicates")) {
    spec.replicates = static_cast<int>(r.Integer("sweep.replicates"));
    if (spec.replicates < 1) {
      throw ParseError("replicates must be >= 1",
                       r.LineOf("sweep.replicates"));
    }
  }
  if (r.Has("sweep.cap")) spec.cap = static_cast<long>(r.Integer("sweep.cap"));
  if (r.Has("sweep.output")) spec.output_path = r.Raw("sweep.output");
  if (r.Has("sweep.json")) spec.json_path = r.Raw("sweep.json");
  if (!spec.horizon.empty() && !spec.rounds.empty()) {
    throw ParseError("sweep axes 'horizon' and 'rounds' are exclusive",
                     r.LineOf("sweep.rounds"));
  }
  r.RejectUnused();
  return spec;
}

SweepSpec LoadSweepSpec(const std::string& path) {
  return ParseSweepSpec(internal::ReadFile(path));
}

std::vector<RunConfig> ExpandSweep(const SweepSpec& spec) {
  const RunConfig& base = spec.base;
  const auto algorithms = OrBase(spec.algorithm, base.algorithm);
  const auto machines = OrBase(spec.machines, base.machines);
  const auto local_steps = OrBase(spec.local_steps, base.local_steps);
  const auto dims = OrBase(spec.dim, base.dim);
  const auto zetas = OrBase(spec.zeta, base.zeta);
  const auto seeds = OrBase(spec.seed, base.seed);
  const bool by_horizon = !spec.horizon.empty();
  const auto lengths = by_horizon ? spec.horizon : OrBase(spec.rounds, base.rounds);

  const double count = static_cast<double>(algorithms.size()) *
                       machines.size() * local_steps.size() * dims.size() *
                       zetas.size() * lengths.size() * seeds.size() *
                       spec.replicates;
  if (count > static_cast<double>(spec.cap)) {
    throw ParseError("sweep has " + FormatReal(count) +
                     " runs, above the cap of " + std::to_string(spec.cap));
  }

  std::vector<RunConfig> runs;
  runs.reserve(static_cast<std::size_t>(count));
  for (Algorithm a : algorithms) {
    for (int m : machines) {
      for (int k : local_steps) {
        for (std::size_t d : dims) {
          for (double z : zetas) {
            for (long len : lengths) {
              if (by_horizon && len % k != 0) {
                throw ParseError("horizon " + std::to_string(len) +
                                 " is not a multiple of K = " +
                                 std::to_string(k));
              }
              for (std::uint64_t s : seeds) {
                for (int rep = 0; rep < spec.replicates; ++rep) {
                  RunConfig c = base;
                  c.algorithm = a;
                  c.machines = m;
                  c.local_steps = k;
                  c.dim = d;
                  c.zeta = z;
                  c.rounds = by_horizon ? len / k : len;
                  c.seed = s + static_cast<std::uint64_t>(rep);
                  runs.push_back(std::move(c));
                }
              }
            }
          }
        }
      }
    }
  }
  return runs;
}

std::string CsvRow(const SweepRow& row) {
  const RunConfig& c = row.config;
  char wall[32];
  std::snprintf(wall, sizeof(wall), "%.3f", row.wall_ms);
  std::string out;
  out += std::to_string(row.run_id) + ",";
  out += ToString(c.algorithm) + ",";
  out += ToString(c.adversary.kind) + ",";
  out += std::to_string(c.machines) + ",";
  out += std::to_string(c.local_steps) + ",";
  out += std::to_string(c.rounds) + ",";
  out += std::to_string(c.horizon()) + ",";
  out += std::to_string(c.dim) + ",";
  out += FormatReal(c.lipschitz_g) + ",";
  out += FormatReal(c.radius_b) + ",";
  out += FormatReal(c.zeta) + ",";
  out += FormatReal(row.eta) + ",";
  out += FormatReal(row.delta) + ",";
  out += std::to_string(c.seed) + ",";
  out += FormatReal(row.avg_regret) + ",";
  out += FormatReal(row.consensus_mean) + ",";
  out += FormatReal(row.fstar) + ",";
  out += FormatReal(row.comparator_loss) + ",";
  out += std::string(wall) + ",";
  out += row.status;
  return out;
}

void WriteSweepCsv(const std::vector<SweepRow>& rows, std::ostream& out) {
  out << kSweepCsvHeader << '\n';
  for (const SweepRow& row : rows) out << CsvRow(row) << '\n';
}

void WriteSweepJson(const std::vector<SweepRow>& rows, std::ostream& out) {
  nlohmann::json array = nlohmann::json::array();
  auto real = [](double v) -> nlohmann::json {
    if (std::isfinite(v)) return v;
    return nullptr;
  };
  for (const SweepRow& row : rows) {
    const RunConfig& c = row.config;
    array.push_back({
        {"run_id", row.run_id},
        {"algorithm", ToString(c.algorithm)},
        {"adversary", ToString(c.adversary.kind)},
        {"M", c.machines},
        {"K", c.local_steps},
        {"R", c.rounds},
        {"T", c.horizon()},
        {"d", c.dim},
        {"G", c.lipschitz_g},
        {"B", c.radius_b},
        {"zeta", c.zeta},
        {"eta", real(row.eta)},
        {"delta", real(row.delta)},
        {"seed", c.seed},
        {"avg_regret", real(row.avg_regret)},
        {"consensus_mean", real(row.consensus_mean)},
        {"fstar", real(row.fstar)},
        {"comparator_loss", real(row.comparator_loss)},
        {"wall_ms", row.wall_ms},
        {"status", row.status},
    });
  }
  out << array.dump(2) << '\n';
}

int WorkerCount() {
  if (const char* env = std::getenv("FEDBCO_THREADS")) {
    const int v = std::atoi(env);
    if (v > 0) return v;
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

std::vector<SweepRow> RunSweep(const std::vector<RunConfig>& runs,
                               int threads) {
  std::vector<SweepRow> rows(runs.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&]() {
    for (std::size_t i = next++; i < runs.size(); i = next++) {
      SweepRow& row = rows[i];
      row.run_id = static_cast<long>(i);
      row.config = runs[i];
      const auto start = std::chrono::steady_clock::now();
      constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();
      try {
        const RegretLedger ledger = Run(runs[i]);
        row.eta = ledger.schedule.eta;
        row.delta = ledger.schedule.delta;
        row.avg_regret = ledger.avg_regret;
        row.consensus_mean = ledger.ConsensusMean();
        row.fstar = ledger.fstar;
        row.comparator_loss = ledger.comparator_total / runs[i].machines;
        row.status = ledger.comparator_certified ? "ok" : "uncertified";
      } catch (const std::exception& e) {
        row.eta = row.delta = row.avg_regret = row.consensus_mean = kNaN;
        row.fstar = row.comparator_loss = kNaN;
        if (dynamic_cast<const ConfigError*>(&e)) {
          row.status = "config_error";
        } else if (dynamic_cast<const DivergenceError*>(&e)) {
          row.status = "diverged";
        } else {
          row.status = "error";
        }
      }
      row.wall_ms = std::chrono::duration<double, std::milli>(
                        std::chrono::steady_clock::now() - start)
                        .count();
    }
  };
  const int n = std::max(1, std::min<int>(threads, static_cast<int>(runs.size())));
  if (n == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int i = 0; i < n; ++i) pool.emplace_back(worker);
    for (std::thread& t : pool) t.join();
  }
  return rows;
}

}  // namespace fedbco
