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

#include "fedbco/simulator.h"

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>
#include <utility>

#include "fedbco/errors.h"
#include "fedbco/rng.h"

namespace fedbco {
namespace {

// Retained trails above this size must be streamed instead.
constexpr double kMaxTrailBytes = 2.0 * 1024 * 1024 * 1024;

bool IsZerothOrder(Algorithm a) {
  const OracleKind o = RequiredOracle(a);
  return o == OracleKind::kOnePoint || o == OracleKind::kTwoPoint;
}

bool LinearKind(AdversaryKind kind) {
  return kind != AdversaryKind::kStochasticHuber;
}

// Variance proxy of the gradient estimate the algorithm consumes.
double SigmaFor(const RunConfig& c) {
  const double d = static_cast<double>(c.dim);
  switch (RequiredOracle(c.algorithm)) {
    case OracleKind::kFirstOrder:
      return 0.0;
    case OracleKind::kNoisyFirstOrder:
      return c.sigma;
    case OracleKind::kOnePoint:
      return 2.0 * d * c.lipschitz_g;
    case OracleKind::kTwoPoint:
      return std::sqrt(d) * c.lipschitz_g;
  }
  return 0.0;
}

double DeltaFor(const RunConfig& c) {
  switch (RequiredOracle(c.algorithm)) {
    case OracleKind::kOnePoint:
      return c.radius_b;
    case OracleKind::kTwoPoint:
      return ScheduleTwoPoint(c.lipschitz_g, c.radius_b, c.horizon(),
                              c.machines, c.local_steps, c.dim, c.rounds)
          .delta;
    default:
      return 0.0;
  }
}

SmoothScheduleInputs SmoothInputs(const RunConfig& c) {
  SmoothScheduleInputs in;
  in.g = c.lipschitz_g;
  in.b = c.radius_b;
  in.horizon = c.horizon();
  in.machines = c.machines;
  in.local_steps = c.local_steps;
  in.rounds = c.rounds;
  in.smooth_h = c.smooth_h;
  in.fstar = c.schedule.fstar;
  in.sigma = SigmaFor(c);
  in.zeta = c.zeta;
  return in;
}

Schedule ResolveWithoutPilot(const RunConfig& c) {
  const double g = c.lipschitz_g;
  const double b = c.radius_b;
  const long t = c.horizon();
  switch (c.schedule.mode) {
    case ScheduleMode::kAuto:
      switch (c.algorithm) {
        case Algorithm::kNcOgd:
          return ScheduleFirstOrder(g, b, t, 1, 1, 0.0);
        case Algorithm::kNcOgdOnePoint:
          return ScheduleOnePoint(g, b, t, 1, 1, c.dim, 0.0);
        case Algorithm::kNcOgdTwoPoint:
          return ScheduleTwoPoint(g, b, t, 1, 1, c.dim, t);
        case Algorithm::kFedPosgd:
          return ScheduleOnePoint(g, b, t, c.machines, c.local_steps, c.dim,
                                  c.zeta);
        case Algorithm::kFedOsgd:
          return ScheduleTwoPoint(g, b, t, c.machines, c.local_steps, c.dim,
                                  c.rounds);
        case Algorithm::kFedOsgdFirstOrder:
          return ScheduleFirstOrder(g, b, t, c.machines, c.local_steps, c.sigma);
      }
      break;
    case ScheduleMode::kOnePoint:
      return ScheduleOnePoint(g, b, t, c.machines, c.local_steps, c.dim,
                              c.zeta);
    case ScheduleMode::kOnePointAlt:
      return ScheduleOnePointAlt(g, b, t, c.machines, c.local_steps,
                                     c.dim, c.zeta);
    case ScheduleMode::kTwoPoint:
      return ScheduleTwoPoint(g, b, t, c.machines, c.local_steps, c.dim,
                              c.rounds);
    case ScheduleMode::kFirstOrder:
      return ScheduleFirstOrder(g, b, t, c.machines, c.local_steps, SigmaFor(c));
    case ScheduleMode::kSmooth:
      return ScheduleSmooth(SmoothInputs(c), DeltaFor(c));
    case ScheduleMode::kTwoPointSmooth: {
      Schedule s = ScheduleSmooth(SmoothInputs(c), DeltaFor(c));
      s.source = ScheduleSource::kTwoPointSmooth;
      return s;
    }
    case ScheduleMode::kManual:
      return ManualSchedule(c.schedule.eta, c.schedule.delta);
  }
  throw ConfigError("unhandled schedule mode");
}

bool NeedsPilot(const RunConfig& c) {
  const bool smooth_rule = c.schedule.mode == ScheduleMode::kSmooth ||
                           c.schedule.mode == ScheduleMode::kTwoPointSmooth;
  return smooth_rule && c.smooth_h > 0.0 && !c.schedule.fstar.has_value();
}

double MeanDistanceToCenter(const std::vector<MachineState>& states) {
  if (states.size() <= 1) return 0.0;
  // Agreeing machines report exactly zero; a rounded mean would not.
  bool agree = true;
  for (const MachineState& s : states) agree = agree && s.x == states[0].x;
  if (agree) return 0.0;
  std::vector<Vec> xs;
  xs.reserve(states.size());
  for (const MachineState& s : states) xs.push_back(s.x);
  const Vec mean = Mean(xs);
  double total = 0.0;
  for (const Vec& x : xs) total += Distance(x, mean);
  return total / static_cast<double>(xs.size());
}

void RecordReply(const OracleReply& reply, bool keep_points,
                 RegretLedger& ledger, double& machine_total) {
  auto push = [&](const Vec& at, double value) {
    ledger.losses.push_back(value);
    machine_total += value;
    if (keep_points) ledger.query_points.push_back(at);
  };
  std::visit(
      [&](const auto& r) {
        using R = std::decay_t<decltype(r)>;
        if constexpr (std::is_same_v<R, GradientReply>) {
          push(r.point, r.value);
        } else if constexpr (std::is_same_v<R, OneValueReply>) {
          push(r.at, r.value);
        } else {
          push(r.at1, r.value1);
          push(r.at2, r.value2);
        }
      },
      reply);
}

std::uint64_t Bits(double v) { return std::bit_cast<std::uint64_t>(v); }

}  // namespace

std::string ToString(ScheduleMode mode) {
  switch (mode) {
    case ScheduleMode::kAuto:
      return "auto";
    case ScheduleMode::kOnePoint:
      return "one_point";
    case ScheduleMode::kOnePointAlt:
      return "one_point_alt";
    case ScheduleMode::kTwoPoint:
      return "two_point";
    case ScheduleMode::kTwoPointSmooth:
      return "two_point_smooth";
    case ScheduleMode::kFirstOrder:
      return "first_order";
    case ScheduleMode::kSmooth:
      return "smooth";
    case ScheduleMode::kManual:
      return "manual";
  }
  return "unknown";
}

ScheduleMode ParseScheduleMode(const std::string& name) {
  for (ScheduleMode m :
       {ScheduleMode::kAuto, ScheduleMode::kOnePoint,
        ScheduleMode::kOnePointAlt, ScheduleMode::kTwoPoint,
        ScheduleMode::kTwoPointSmooth, ScheduleMode::kFirstOrder, ScheduleMode::kSmooth,
        ScheduleMode::kManual}) {
    if (ToString(m) == name) return m;
  }
  throw std::invalid_argument("unknown schedule '" + name + "'");
}

AdversarySpec RunConfig::ResolvedAdversary() const {
  AdversarySpec spec = adversary;
  spec.dim = dim;
  spec.machines = machines;
  spec.lipschitz_g = lipschitz_g;
  spec.zeta = zeta;
  if (spec.kind == AdversaryKind::kStochasticHuber) spec.smooth_h = smooth_h;
  return spec;
}

void Validate(const RunConfig& c) {
  auto fail = [](const std::string& msg) { throw ConfigError(msg); };
  if (c.machines < 1) fail("machines must be >= 1");
  if (c.local_steps < 1) fail("local_steps must be >= 1");
  if (c.rounds < 1) fail("rounds must be >= 1");
  if (c.dim < 1) fail("dim must be >= 1");
  if (!(c.lipschitz_g > 0.0) || !std::isfinite(c.lipschitz_g)) {
    fail("G must be positive and finite");
  }
  if (!(c.radius_b > 0.0) || !std::isfinite(c.radius_b)) {
    fail("B must be positive and finite");
  }
  if (!(c.zeta >= 0.0) || c.zeta > 2.0 * c.lipschitz_g) {
    fail("zeta must lie in [0, 2G]");
  }
  if (!(c.sigma >= 0.0) || !std::isfinite(c.sigma)) {
    fail("sigma must be >= 0");
  }
  if (!(c.smooth_h >= 0.0) || !std::isfinite(c.smooth_h)) {
    fail("smooth_h must be >= 0");
  }
  if (static_cast<double>(c.local_steps) * static_cast<double>(c.rounds) >
      1e10) {
    fail("horizon K * R too large");
  }
  const OracleKind required = RequiredOracle(c.algorithm);
  if (c.oracle.has_value() && *c.oracle != required) {
    fail("algorithm " + ToString(c.algorithm) + " requires a " +
         ToString(required) + " oracle, got " + ToString(*c.oracle));
  }
  if (c.adversary.kind == AdversaryKind::kStochasticHuber &&
      !(c.smooth_h > 0.0)) {
    fail("huber adversary requires smooth_h > 0");
  }
  if (c.schedule.mode == ScheduleMode::kManual) {
    if (!(c.schedule.eta > 0.0)) fail("manual schedule requires eta > 0");
    if (IsZerothOrder(c.algorithm) && !(c.schedule.delta > 0.0)) {
      fail("zeroth-order algorithms require delta > 0");
    }
  }
  if (c.schedule.mode == ScheduleMode::kTwoPointSmooth &&
      required != OracleKind::kTwoPoint) {
    fail("two_point_smooth schedule applies to two-point algorithms only");
  }
  if (c.schedule.fstar.has_value() && !std::isfinite(*c.schedule.fstar)) {
    fail("fstar must be finite");
  }
  if (c.retain_trail) {
    const double q = QueriesPerRound(c.algorithm);
    const double bytes = 8.0 * static_cast<double>(c.horizon()) *
                         c.machines * static_cast<double>(c.dim) * (2.0 + q);
    if (bytes > kMaxTrailBytes) {
      fail("retained trail would need " + std::to_string(bytes / 1e9) +
           " GB; set retain_trail = false");
    }
  }
}

Schedule ResolveSchedule(const RunConfig& config) {
  Validate(config);
  if (!NeedsPilot(config)) return ResolveWithoutPilot(config);
  // Pilot pass with the F* branch dropped, then plug in the realized F*.
  const Schedule pilot_schedule = ResolveWithoutPilot(config);
  RunConfig pilot = config;
  pilot.retain_trail = false;
  const RegretLedger ledger = RunWithSchedule(pilot, pilot_schedule);
  RunConfig final_config = config;
  final_config.schedule.fstar = ledger.fstar;
  Schedule s = ResolveWithoutPilot(final_config);
  std::ostringstream note;
  note << s.note << "; F* = " << ledger.fstar << " from pilot run";
  s.note = note.str();
  return s;
}

double RegretLedger::ConsensusMean() const {
  if (consensus.empty()) return 0.0;
  double total = 0.0;
  for (double c : consensus) total += c;
  return total / static_cast<double>(consensus.size());
}

RegretLedger Run(const RunConfig& config) {
  return RunWithSchedule(config, ResolveSchedule(config));
}

RegretLedger RunWithSchedule(const RunConfig& config,
                             const Schedule& schedule) {
  Validate(config);
  if (!(schedule.eta > 0.0) || !std::isfinite(schedule.eta)) {
    throw ConfigError("schedule eta must be positive and finite");
  }
  if (IsZerothOrder(config.algorithm) && !(schedule.delta > 0.0)) {
    throw ConfigError("zeroth-order algorithms require delta > 0");
  }

  const int m_count = config.machines;
  const long horizon = config.horizon();
  const std::size_t d = config.dim;
  const int q = QueriesPerRound(config.algorithm);
  const bool keep = config.retain_trail;
  const AdversarySpec spec = config.ResolvedAdversary();
  const Adversary adversary(spec, config.seed);
  const bool linear = LinearKind(spec.kind);

  RegretLedger ledger;
  ledger.config = config;
  ledger.schedule = schedule;
  ledger.queries_per_round = q;
  ledger.realized_zeta = adversary.realized_zeta();
  ledger.comparator_method = linear ? "linear" : "convex";
  const std::size_t entries = static_cast<std::size_t>(horizon) * m_count * q;
  ledger.losses.reserve(entries);
  if (keep) ledger.query_points.reserve(entries);
  ledger.consensus.reserve(horizon);
  ledger.machine_incurred.assign(m_count, 0.0);
  if (linear) ledger.machine_linear_sums.assign(m_count, Vec(d, 0.0));

  std::vector<MachineState> states;
  states.reserve(m_count);
  for (int m = 0; m < m_count; ++m) {
    MachineState s =
        InitialMachineState(config.shared_machine_streams ? 0 : m, d,
                            config.seed);
    s.id = m;
    states.push_back(std::move(s));
  }

  History hist(keep);
  const bool federated = IsFederated(config.algorithm);
  for (long t = 0; t < horizon; ++t) {
    std::vector<Vec> models;
    models.reserve(m_count);
    for (const MachineState& s : states) models.push_back(s.x);
    ledger.consensus.push_back(MeanDistanceToCenter(states));

    std::vector<CostFunction> fns = adversary.EmitRound(t, hist);
    for (int m = 0; m < m_count; ++m) {
      MachineState& s = states[m];
      const CostFunction& f = fns[m];
      StepOutcome out;
      switch (config.algorithm) {
        case Algorithm::kNcOgd:
          out = StepNcOgd(s, f, schedule.eta);
          break;
        case Algorithm::kNcOgdOnePoint:
          out = StepNcOgdOnePoint(s, f, schedule, config.radius_b);
          break;
        case Algorithm::kFedPosgd:
          out = StepFedPosgd(s, f, schedule, config.radius_b);
          break;
        case Algorithm::kNcOgdTwoPoint:
        case Algorithm::kFedOsgd:
          out = StepFedOsgd(s, f, schedule);
          break;
        case Algorithm::kFedOsgdFirstOrder:
          out = StepFedOsgdFirstOrder(s, f, schedule, config.sigma);
          break;
      }
      RecordReply(out.reply, keep, ledger, ledger.machine_incurred[m]);
      ledger.max_step_norm = std::max(ledger.max_step_norm, out.step_norm);
      if (!AllFinite(s.x)) {
        throw DivergenceError("non-finite iterate on machine " +
                                  std::to_string(m) + " at round " +
                                  std::to_string(t),
                              t);
      }
      if (linear) Axpy(1.0, f.beta(), ledger.machine_linear_sums[m]);
    }
    if (federated && (t + 1) % config.local_steps == 0) {
      Communicate(states, t, config.local_steps);
      ++ledger.communications;
    }
    hist.Append(std::move(models), std::move(fns));
  }

  for (const MachineState& s : states) ledger.final_iterates.push_back(s.x);
  if (keep) ledger.functions = hist.TakeFunctions();

  const double n = static_cast<double>(horizon) * m_count;
  if (linear) {
    Vec total(d, 0.0);
    for (const Vec& s : ledger.machine_linear_sums) Axpy(1.0, s, total);
    ledger.comparator = ComparatorFromSum(total, config.radius_b);
    ledger.comparator_total = Dot(total, ledger.comparator);
    ledger.comparator_certified = true;
  } else {
    ConvexComparatorOptions opts;
    opts.probe_seed = config.seed;
    ComparatorResult res;
    if (keep) {
      res = ComparatorConvex(StoredFunctions(ledger.functions),
                             config.radius_b, opts);
    } else {
      res = ComparatorConvex(ReplayedFunctions(adversary, horizon),
                             config.radius_b, opts);
    }
    ledger.comparator = std::move(res.x);
    ledger.comparator_total = res.average_value * n;
    ledger.comparator_certified = res.certified;
  }
  ledger.fstar = ledger.comparator_total / n;

  double incurred = 0.0;
  for (double v : ledger.losses) incurred += v;
  ledger.incurred_total = incurred;
  ledger.avg_regret =
      (incurred - q * ledger.comparator_total) / (q * n);
  return ledger;
}

// -- Function sources ----------------------------------------------------------

std::size_t StoredFunctions::dim() const {
  if (rounds_.empty() || rounds_.front().empty()) return 0;
  return rounds_.front().front().dim();
}

void StoredFunctions::ForEachRound(
    const std::function<void(long, const std::vector<CostFunction>&)>& visit)
    const {
  for (std::size_t t = 0; t < rounds_.size(); ++t) {
    visit(static_cast<long>(t), rounds_[t]);
  }
}

void ReplayedFunctions::ForEachRound(
    const std::function<void(long, const std::vector<CostFunction>&)>& visit)
    const {
  if (!adversary_.oblivious()) {
    throw std::logic_error("cannot replay an adaptive adversary");
  }
  for (long t = 0; t < rounds_; ++t) visit(t, adversary_.EmitOblivious(t));
}

void MachineFunctions::ForEachRound(
    const std::function<void(long, const std::vector<CostFunction>&)>& visit)
    const {
  inner_.ForEachRound([&](long t, const std::vector<CostFunction>& fns) {
    visit(t, std::vector<CostFunction>{fns.at(machine_)});
  });
}

double TotalValue(const FunctionSource& source, VecView x) {
  double total = 0.0;
  source.ForEachRound([&](long, const std::vector<CostFunction>& fns) {
    for (const CostFunction& f : fns) total += f.Value(x);
  });
  return total;
}

Vec TotalGradient(const FunctionSource& source, VecView x) {
  Vec total(x.size(), 0.0);
  source.ForEachRound([&](long, const std::vector<CostFunction>& fns) {
    for (const CostFunction& f : fns) Axpy(1.0, f.Gradient(x), total);
  });
  return total;
}

bool AllLinear(const FunctionSource& source) {
  bool all = true;
  source.ForEachRound([&](long, const std::vector<CostFunction>& fns) {
    for (const CostFunction& f : fns) all = all && f.is_linear();
  });
  return all;
}

Vec ComparatorFromSum(VecView coefficient_sum, double radius) {
  const double norm = Norm(coefficient_sum);
  Vec x(coefficient_sum.size(), 0.0);
  if (norm == 0.0) return x;
  for (std::size_t i = 0; i < x.size(); ++i) {
    x[i] = -radius * coefficient_sum[i] / norm;
  }
  return x;
}

Vec ComparatorLinear(const FunctionSource& source, double radius) {
  if (!AllLinear(source)) return ComparatorConvex(source, radius).x;
  Vec sum(source.dim(), 0.0);
  source.ForEachRound([&](long, const std::vector<CostFunction>& fns) {
    for (const CostFunction& f : fns) Axpy(1.0, f.beta(), sum);
  });
  return ComparatorFromSum(sum, radius);
}

ComparatorResult ComparatorConvex(const FunctionSource& source, double radius,
                                  const ConvexComparatorOptions& options) {
  const std::size_t d = source.dim();
  double count = 0.0;
  double g_max = 0.0;
  double h_max = 0.0;
  source.ForEachRound([&](long, const std::vector<CostFunction>& fns) {
    for (const CostFunction& f : fns) {
      count += 1.0;
      g_max = std::max(g_max, f.lipschitz_g());
      h_max = std::max(h_max, f.smooth_h());
    }
  });
  ComparatorResult result;
  result.x.assign(d, 0.0);
  if (count == 0.0) {
    result.certified = true;
    return result;
  }
  const double tol =
      options.tol > 0.0 ? options.tol : 1e-8 * std::max(g_max, 1e-300) * radius;
  auto value = [&](const Vec& x) { return TotalValue(source, x) / count; };
  auto gradient = [&](const Vec& x) {
    return Scaled(TotalGradient(source, x), 1.0 / count);
  };

  double step = (h_max > 0.0 && std::isfinite(h_max))
                    ? 1.0 / h_max
                    : radius / std::max(g_max, 1e-300);
  Vec x = result.x;
  double fx = value(x);
  Vec g = gradient(x);
  int it = 0;
  for (; it < options.max_iterations; ++it) {
    Vec next;
    Vec dx;
    double f_next = fx;
    for (int halvings = 0; halvings < 80; ++halvings) {
      next = x;
      Axpy(-step, g, next);
      next = ProjectL2Ball(next, radius);
      dx = Sub(next, x);
      f_next = value(next);
      const double model = fx + Dot(g, dx) + SquaredNorm(dx) / (2.0 * step);
      if (f_next <= model + 1e-14 * (std::abs(fx) + 1.0)) break;
      step *= 0.5;
    }
    const double pg = Norm(dx) / step;
    if (f_next <= fx) {
      x = std::move(next);
      fx = f_next;
      g = gradient(x);
    }
    if (pg * radius <= tol || Norm(dx) == 0.0) break;
    step *= 1.5;
  }
  result.iterations = it;

  // Probe certification: half in the ball, half on its boundary.
  RngStream rng(options.probe_seed, StreamTag("comparator_probe"));
  bool certified = true;
  for (int p = 0; p < options.probes; ++p) {
    Vec probe = p % 2 == 0 ? SampleBall(rng, d, radius)
                           : Scaled(SampleUnitSphere(rng, d), radius);
    const double fp = value(probe);
    if (fp < fx - tol) {
      certified = false;
      x = std::move(probe);
      fx = fp;
    }
  }
  result.x = std::move(x);
  result.average_value = fx;
  result.certified = certified;
  return result;
}

// -- Diagnostics --------------------------------------------------------------

std::vector<double> ConsensusSeries(const RegretLedger& ledger) {
  return ledger.consensus;
}

AuditReport AuditLedger(const RegretLedger& ledger, double tol) {
  AuditReport report;
  const RunConfig& c = ledger.config;
  const int q = ledger.queries_per_round;
  const long m_count = c.machines;
  report.expected_entries = c.horizon() * m_count * q;
  report.found_entries = ledger.LossCount();
  if (ledger.functions.empty() || ledger.query_points.empty()) {
    report.message = "trail not retained";
    return report;
  }
  if (report.found_entries != report.expected_entries ||
      static_cast<long>(ledger.query_points.size()) !=
          report.expected_entries ||
      static_cast<long>(ledger.functions.size()) != c.horizon()) {
    report.message = "ledger has wrong number of entries";
    return report;
  }

  double incurred = 0.0;
  for (long i = 0; i < report.expected_entries; ++i) {
    const long t = i / (m_count * q);
    const long m = (i / q) % m_count;
    const double v = Eval(ledger.functions[t][m], ledger.query_points[i]);
    report.max_loss_mismatch =
        std::max(report.max_loss_mismatch, std::abs(v - ledger.losses[i]));
    incurred += v;
  }
  double comparator_total = 0.0;
  for (const auto& round : ledger.functions) {
    for (const CostFunction& f : round) {
      comparator_total += Eval(f, ledger.comparator);
    }
  }
  const double n = static_cast<double>(c.horizon()) * m_count;
  report.recomputed_avg_regret =
      (incurred - q * comparator_total) / (q * n);
  const double gap = std::abs(report.recomputed_avg_regret - ledger.avg_regret);
  report.ok = gap <= tol && report.max_loss_mismatch <= tol;
  std::ostringstream msg;
  msg << "regret gap " << gap << ", worst loss mismatch "
      << report.max_loss_mismatch;
  report.message = msg.str();
  return report;
}

double PerMachineComparatorRegret(const RegretLedger& ledger) {
  const RunConfig& c = ledger.config;
  const int q = ledger.queries_per_round;
  double total = 0.0;
  for (int m = 0; m < c.machines; ++m) {
    double best;
    if (!ledger.machine_linear_sums.empty()) {
      best = -c.radius_b * Norm(ledger.machine_linear_sums[m]);
    } else if (!ledger.functions.empty()) {
      const StoredFunctions stored(ledger.functions);
      const MachineFunctions mine(stored, m);
      best = ComparatorConvex(mine, c.radius_b).average_value *
             static_cast<double>(c.horizon());
    } else {
      throw std::logic_error(
          "per-machine regret needs a retained trail or a linear run");
    }
    total += ledger.machine_incurred[m] - q * best;
  }
  return total / (q * static_cast<double>(c.horizon()) * c.machines);
}

std::uint64_t LedgerFingerprint(const RegretLedger& ledger) {
  std::uint64_t h = StreamTag("ledger");
  auto mix = [&h](std::uint64_t v) { h = Mix64(h ^ v); };
  mix(Bits(ledger.schedule.eta));
  mix(Bits(ledger.schedule.delta));
  for (double v : ledger.losses) mix(Bits(v));
  for (const Vec& p : ledger.query_points) {
    for (double v : p) mix(Bits(v));
  }
  for (double v : ledger.consensus) mix(Bits(v));
  for (double v : ledger.comparator) mix(Bits(v));
  mix(Bits(ledger.comparator_total));
  mix(Bits(ledger.avg_regret));
  for (const Vec& x : ledger.final_iterates) {
    for (double v : x) mix(Bits(v));
  }
  return h;
}

}  // namespace fedbco
