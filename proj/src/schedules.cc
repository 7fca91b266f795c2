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

#include "fedbco/schedules.h"

#include <cmath>
#include <limits>
#include <string>
#include <utility>
#include <vector>

#include "fedbco/errors.h"

namespace fedbco {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

void CheckCommon(double g, double b, long horizon, int machines,
                 int local_steps) {
  if (!(g > 0.0) || !(b > 0.0) || horizon <= 0) {
    throw ConfigError("schedule: G, B and T must be positive");
  }
  if (machines < 1 || local_steps < 1) {
    throw ConfigError("schedule: M and K must be >= 1");
  }
}

// a / b with a vanishing denominator read as a dropped (+inf) term.
double Ratio(double num, double den) { return den > 0.0 ? num / den : kInf; }

struct Term {
  const char* name;
  double value;
};

// Smallest term and its name.
std::pair<double, std::string> ArgMin(const std::vector<Term>& terms) {
  double best = kInf;
  std::string name = "none";
  for (const Term& t : terms) {
    if (t.value < best) {
      best = t.value;
      name = t.name;
    }
  }
  return {best, name};
}

}  // namespace

std::string ToString(ScheduleSource source) {
  switch (source) {
    case ScheduleSource::kOnePoint:
      return "one_point";
    case ScheduleSource::kTwoPoint:
      return "two_point";
    case ScheduleSource::kTwoPointSmooth:
      return "two_point_smooth";
    case ScheduleSource::kFirstOrder:
      return "first_order";
    case ScheduleSource::kSmooth:
      return "smooth";
    case ScheduleSource::kManual:
      return "manual";
  }
  return "unknown";
}

Schedule ManualSchedule(double eta, double delta) {
  if (!(eta > 0.0) || !std::isfinite(eta) || !(delta >= 0.0) ||
      !std::isfinite(delta)) {
    throw ConfigError("schedule: need eta > 0 and delta >= 0");
  }
  return Schedule{eta, delta, ScheduleSource::kManual, "manual"};
}

Schedule ScheduleOnePoint(double g, double b, long horizon, int machines,
                          int local_steps, std::size_t dim, double zeta) {
  CheckCommon(g, b, horizon, machines, local_steps);
  const double sigma = 2.0 * static_cast<double>(dim) * g;
  const bool local = local_steps > 1;
  const double k = local_steps;
  const auto [factor, name] = ArgMin({
      {"one", 1.0},
      {"variance", g * std::sqrt(static_cast<double>(machines)) / sigma},
      {"consensus", local ? Ratio(std::sqrt(g),
                                  std::sqrt(sigma) * std::pow(k, 0.25))
                          : kInf},
      {"heterogeneity", local ? Ratio(std::sqrt(g), std::sqrt(zeta * k)) : kInf},
  });
  const double eta = b / (g * std::sqrt(static_cast<double>(horizon))) * factor;
  return Schedule{eta, b, ScheduleSource::kOnePoint, "min term: " + name};
}

Schedule ScheduleOnePointAlt(double g, double b, long horizon, int machines,
                             int local_steps, std::size_t dim, double zeta) {
  CheckCommon(g, b, horizon, machines, local_steps);
  const double d = static_cast<double>(dim);
  const bool local = local_steps > 1;
  const double k = local_steps;
  const auto [factor, name] = ArgMin({
      {"one", 1.0},
      {"variance", std::sqrt(static_cast<double>(machines)) / (d * b)},
      {"consensus", local ? 1.0 / (std::sqrt(d * b) * std::pow(k, 0.25)) : kInf},
      {"heterogeneity", local ? Ratio(std::sqrt(g), std::sqrt(zeta * k)) : kInf},
  });
  const double eta = b / (g * std::sqrt(static_cast<double>(horizon))) * factor;
  return Schedule{eta, b, ScheduleSource::kManual,
                  "alternative one-point form, min term: " + name};
}

Schedule ScheduleTwoPoint(double g, double b, long horizon, int machines,
                          int local_steps, std::size_t dim, long rounds) {
  CheckCommon(g, b, horizon, machines, local_steps);
  if (rounds <= 0 || horizon != static_cast<long>(local_steps) * rounds) {
    throw ConfigError("schedule: T must equal K * R");
  }
  const double d = static_cast<double>(dim);
  const double m = machines;
  const double k = local_steps;
  const double d4 = std::pow(d, 0.25);
  const auto [factor, name] = ArgMin({
      {"one", 1.0},
      {"variance", std::sqrt(m / d)},
      {"consensus", local_steps > 1 ? 1.0 / (std::sqrt(k) * d4) : kInf},
  });
  const double eta = b / (g * std::sqrt(static_cast<double>(horizon))) * factor;
  const double delta = b * d4 / std::sqrt(static_cast<double>(rounds)) *
                       (1.0 + d4 / std::sqrt(m * k));
  return Schedule{eta, delta, ScheduleSource::kTwoPoint, "min term: " + name};
}

Schedule ScheduleFirstOrder(double g, double b, long horizon, int machines,
                        int local_steps, double sigma) {
  CheckCommon(g, b, horizon, machines, local_steps);
  if (!(sigma >= 0.0)) throw ConfigError("schedule: sigma must be >= 0");
  const bool local = local_steps > 1;
  const double k = local_steps;
  const auto [factor, name] = ArgMin({
      {"one", 1.0},
      {"variance", Ratio(g * std::sqrt(static_cast<double>(machines)), sigma)},
      {"consensus", local ? Ratio(std::sqrt(g), std::sqrt(sigma * k)) : kInf},
      {"drift", local ? 1.0 / std::sqrt(k) : kInf},
  });
  const double eta = b / (g * std::sqrt(static_cast<double>(horizon))) * factor;
  return Schedule{eta, 0.0, ScheduleSource::kFirstOrder, "min term: " + name};
}

Schedule ScheduleSmooth(const SmoothScheduleInputs& in, double delta) {
  CheckCommon(in.g, in.b, in.horizon, in.machines, in.local_steps);
  if (!(in.smooth_h >= 0.0)) throw ConfigError("schedule: H must be >= 0");
  if (!(in.sigma >= 0.0) || !(in.zeta >= 0.0)) {
    throw ConfigError("schedule: sigma and zeta must be >= 0");
  }
  if (!(delta >= 0.0)) throw ConfigError("schedule: delta must be >= 0");

  const double b = in.b;
  const double g = in.g;
  const double h = in.smooth_h;
  const double sigma = in.sigma;
  const double zeta = in.zeta;
  const double k = in.local_steps;
  const double r = static_cast<double>(in.rounds);
  const double kr = k * r;
  if (in.rounds <= 0 ||
      in.horizon != static_cast<long>(in.local_steps) * in.rounds) {
    throw ConfigError("schedule: T must equal K * R");
  }

  // The optimistic F* branch only competes inside the max when it is
  // defined, i.e. H F* > 0.
  double horizon_term = b / (g * std::sqrt(kr));
  const bool fstar_branch = in.fstar.has_value() && h * *in.fstar > 0.0;
  if (fstar_branch) {
    horizon_term = std::max(horizon_term, b / std::sqrt(h * *in.fstar * kr));
  }

  double local_term = kInf;
  std::string local_branch = "dropped";
  if (in.local_steps > 1) {
    const double b23 = std::cbrt(b * b);
    const double h13 = std::cbrt(h);
    const double smooth_branch = std::min(
        {Ratio(b23, h13 * std::cbrt(sigma * sigma) * std::cbrt(k * k) *
                        std::cbrt(r)),
         Ratio(b23, h13 * std::cbrt(zeta * zeta) * k * std::cbrt(r)),
         Ratio(b, std::pow(k, 0.75) * std::sqrt(zeta * sigma * r)),
         Ratio(b, zeta * k * std::sqrt(r))});
    const double lipschitz_branch =
        std::min(Ratio(b, std::pow(k, 0.75) * std::sqrt(g * sigma * r)),
                 Ratio(b, k * std::sqrt(zeta * g * r)));
    local_term = std::max(smooth_branch, lipschitz_branch);
    local_branch = smooth_branch >= lipschitz_branch ? "smooth" : "lipschitz";
  }

  const auto [eta, name] = ArgMin({
      {"smoothness cap", Ratio(1.0, 2.0 * h)},
      {"variance", Ratio(b * std::sqrt(static_cast<double>(in.machines)),
                         sigma * std::sqrt(kr))},
      {"horizon", horizon_term},
      {"local steps", local_term},
  });
  if (!std::isfinite(eta)) {
    throw ConfigError("schedule: smooth-case expression is unbounded");
  }
  std::string note = "min term: " + name + "; local branch: " + local_branch;
  if (!fstar_branch) note += "; F* branch dropped";
  return Schedule{eta, delta, ScheduleSource::kSmooth, std::move(note)};
}

}  // namespace fedbco
