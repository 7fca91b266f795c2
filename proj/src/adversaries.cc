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

#include "fedbco/adversaries.h"

#include <algorithm>
#include <bit>
#include <cmath>
#include <stdexcept>
#include <utility>

#include "fedbco/errors.h"

namespace fedbco {

std::string ToString(AdversaryKind kind) {
  switch (kind) {
    case AdversaryKind::kStochasticLinear:
      return "stochastic_linear";
    case AdversaryKind::kAdaptiveLinear:
      return "adaptive_linear";
    case AdversaryKind::kStochasticHuber:
      return "stochastic_huber";
    case AdversaryKind::kRademacherLinear:
      return "rademacher_linear";
  }
  return "unknown";
}

AdversaryKind ParseAdversaryKind(const std::string& name) {
  if (name == "stochastic_linear") return AdversaryKind::kStochasticLinear;
  if (name == "adaptive_linear") return AdversaryKind::kAdaptiveLinear;
  if (name == "stochastic_huber") return AdversaryKind::kStochasticHuber;
  if (name == "rademacher_linear") return AdversaryKind::kRademacherLinear;
  throw std::invalid_argument("unknown adversary '" + name + "'");
}

std::string ToString(TargetingRule rule) {
  switch (rule) {
    case TargetingRule::kMeanIterate:
      return "mean_iterate";
    case TargetingRule::kMeanAndDeviation:
      return "mean_and_deviation";
  }
  return "unknown";
}

TargetingRule ParseTargetingRule(const std::string& name) {
  if (name == "mean_iterate") return TargetingRule::kMeanIterate;
  if (name == "mean_and_deviation") return TargetingRule::kMeanAndDeviation;
  throw std::invalid_argument("unknown targeting rule '" + name + "'");
}

// -- History ------------------------------------------------------------------

void History::Append(std::vector<Vec> models,
                     std::vector<CostFunction> functions) {
  if (!retain_all_) {
    models_.clear();
    functions_.clear();
  }
  models_.push_back(std::move(models));
  functions_.push_back(std::move(functions));
  ++rounds_;
}

const std::vector<Vec>& History::LastModels() const {
  static const std::vector<Vec> kEmpty;
  return models_.empty() ? kEmpty : models_.back();
}

std::vector<std::vector<CostFunction>> History::TakeFunctions() {
  return std::exchange(functions_, {});
}

History History::Truncated(long rounds) const {
  if (!retain_all_ || rounds > rounds_) {
    throw std::logic_error("History::Truncated: rounds not retained");
  }
  History out(true);
  for (long t = 0; t < rounds; ++t) {
    out.Append(models_[t], functions_[t]);
  }
  return out;
}

// -- Adversary ----------------------------------------------------------------

double Heterogeneity(std::span<const Vec> vs) {
  const Vec mean = Mean(vs);
  double s = 0.0;
  for (const Vec& v : vs) {
    const double dist = Distance(v, mean);
    s += dist * dist;
  }
  return s / static_cast<double>(vs.size());
}

std::vector<Vec> DrawCenteredOffsets(RngStream& rng, int count,
                                     std::size_t dim, double rms) {
  std::vector<Vec> out(count, Vec(dim, 0.0));
  if (count <= 1 || rms == 0.0) return out;
  for (Vec& v : out) {
    for (double& x : v) x = rng.Normal();
  }
  const Vec mean = Mean(out);
  for (Vec& v : out) Axpy(-1.0, mean, v);
  const double current = std::sqrt(Heterogeneity(out));
  if (current == 0.0) return out;
  for (Vec& v : out) {
    for (double& x : v) x *= rms / current;
  }
  return out;
}

namespace {

// Uniformly shrinks offsets so the widest has norm <= cap.
void CapOffsets(std::vector<Vec>& offsets, double cap) {
  double widest = 0.0;
  for (const Vec& v : offsets) widest = std::max(widest, Norm(v));
  if (widest <= cap) return;
  const double scale = cap > 0.0 ? cap / widest : 0.0;
  for (Vec& v : offsets) {
    for (double& x : v) x *= scale;
  }
}

}  // namespace

Adversary::Adversary(const AdversarySpec& spec, std::uint64_t seed)
    : spec_(spec), base_(seed, StreamTag("adversary")) {
  const double g = spec_.lipschitz_g;
  if (!(g > 0.0)) throw ConfigError("adversary: lipschitz_g must be positive");
  if (spec_.dim == 0 || spec_.machines < 1) {
    throw ConfigError("adversary: need dim >= 1 and machines >= 1");
  }
  if (!(spec_.zeta >= 0.0) || spec_.zeta > 2.0 * g) {
    throw ConfigError("adversary: zeta must lie in [0, 2G]");
  }
  if (spec_.mean_scale < 0.0 || spec_.mean_scale > 1.0) {
    throw ConfigError("adversary: mean_scale must lie in [0, 1]");
  }

  RngStream setup = base_.Substream(StreamTag("setup"));
  mean_direction_ = SampleUnitSphere(setup, spec_.dim);

  switch (spec_.kind) {
    case AdversaryKind::kRademacherLinear:
      if (spec_.zeta > 0.0) {
        throw ConfigError(
            "adversary: rademacher_linear is coordinated and needs zeta = 0");
      }
      offsets_.assign(spec_.machines, Vec(spec_.dim, 0.0));
      shared_radius_ = g;
      break;
    case AdversaryKind::kStochasticHuber: {
      if (!(spec_.smooth_h > 0.0)) {
        throw ConfigError("adversary: stochastic_huber needs smooth_h > 0");
      }
      offsets_ = DrawCenteredOffsets(setup, spec_.machines, spec_.dim,
                                     spec_.zeta / spec_.smooth_h);
      shared_radius_ = g;
      // Gradient gaps are bounded by H times center gaps.
      realized_zeta_ = spec_.smooth_h * std::sqrt(Heterogeneity(offsets_));
      break;
    }
    case AdversaryKind::kStochasticLinear:
    case AdversaryKind::kAdaptiveLinear: {
      // The shared part keeps radius G - zeta/2; offsets are shrunk until
      // the widest fits in the remaining zeta/2, so |beta| <= G.
      shared_radius_ = std::max(0.0, g - 0.5 * spec_.zeta);
      offsets_ =
          DrawCenteredOffsets(setup, spec_.machines, spec_.dim, spec_.zeta);
      CapOffsets(offsets_, g - shared_radius_);
      realized_zeta_ = std::sqrt(Heterogeneity(offsets_));
      break;
    }
  }
}

bool Adversary::oblivious() const {
  return spec_.kind != AdversaryKind::kAdaptiveLinear;
}

std::vector<CostFunction> Adversary::LinearFromShared(const Vec& shared) const {
  std::vector<CostFunction> out;
  out.reserve(spec_.machines);
  for (int m = 0; m < spec_.machines; ++m) {
    out.push_back(
        CostFunction::Linear(Add(shared, offsets_[m]), spec_.lipschitz_g));
  }
  return out;
}

std::vector<CostFunction> Adversary::EmitOblivious(long t) const {
  if (!oblivious()) {
    throw std::logic_error("EmitOblivious called on an adaptive adversary");
  }
  RngStream rng = base_.Substream(static_cast<std::uint64_t>(t));
  const std::size_t d = spec_.dim;
  switch (spec_.kind) {
    case AdversaryKind::kStochasticLinear: {
      const Vec u = SampleUnitSphere(rng, d);
      Vec shared(d);
      const double a = spec_.mean_scale;
      for (std::size_t i = 0; i < d; ++i) {
        shared[i] = shared_radius_ * ((1.0 - a) * u[i] + a * mean_direction_[i]);
      }
      return LinearFromShared(shared);
    }
    case AdversaryKind::kRademacherLinear: {
      const double scale = spec_.lipschitz_g / std::sqrt(static_cast<double>(d));
      Vec shared(d);
      for (double& v : shared) v = (rng.NextU64() >> 63) ? scale : -scale;
      return LinearFromShared(shared);
    }
    case AdversaryKind::kStochasticHuber: {
      const Vec u = SampleUnitSphere(rng, d);
      std::vector<CostFunction> out;
      out.reserve(spec_.machines);
      for (int m = 0; m < spec_.machines; ++m) {
        Vec center(d);
        for (std::size_t i = 0; i < d; ++i) {
          center[i] = spec_.center_norm * mean_direction_[i] +
                      spec_.center_jitter * u[i] + offsets_[m][i];
        }
        out.push_back(CostFunction::HuberQuadratic(
            std::move(center), spec_.smooth_h, spec_.lipschitz_g));
      }
      return out;
    }
    case AdversaryKind::kAdaptiveLinear:
      break;
  }
  throw std::logic_error("unreachable");
}

std::vector<CostFunction> Adversary::EmitRound(long t,
                                               const History& hist) const {
  if (hist.rounds() != t) {
    throw std::logic_error("EmitRound: history must hold exactly rounds < t");
  }
  if (oblivious()) return EmitOblivious(t);

  // Worst direction against averaged play: the previous mean iterate. A zero
  // or missing mean falls back to the first coordinate axis.
  Vec direction(spec_.dim, 0.0);
  const std::vector<Vec>& last = hist.LastModels();
  bool have_mean = false;
  if (!last.empty()) {
    const Vec mean = Mean(last);
    const double norm = Norm(mean);
    if (norm > 0.0) {
      direction = Scaled(mean, 1.0 / norm);
      have_mean = true;
    }
  }
  if (!have_mean) direction[0] = 1.0;

  if (spec_.targeting == TargetingRule::kMeanAndDeviation) {
    return EmitDeviationTargeted(direction, hist);
  }
  return LinearFromShared(Scaled(direction, shared_radius_));
}

std::vector<CostFunction> Adversary::EmitDeviationTargeted(
    const Vec& direction, const History& hist) const {
  const int machines = spec_.machines;
  const double g = spec_.lipschitz_g;
  std::vector<Vec> deviations(machines, Vec(spec_.dim, 0.0));
  const std::vector<Vec>& last = hist.LastModels();
  double rms = 0.0;
  if (!last.empty() && spec_.zeta > 0.0) {
    const Vec mean = Mean(last);
    for (int m = 0; m < machines; ++m) deviations[m] = Sub(last[m], mean);
    rms = std::sqrt(Heterogeneity(last));
  }
  if (rms > 0.0) {
    for (Vec& v : deviations) {
      for (double& x : v) x *= spec_.zeta / rms;
    }
    CapOffsets(deviations, g - shared_radius_);
  }
  const double radius = shared_radius_;
  std::vector<CostFunction> out;
  out.reserve(machines);
  for (int m = 0; m < machines; ++m) {
    Vec beta = Scaled(direction, radius);
    Axpy(1.0, deviations[m], beta);
    out.push_back(CostFunction::Linear(std::move(beta), g));
  }
  return out;
}

// -- Enumeration and F* -------------------------------------------------------

double RademacherExpectedWalk(int horizon) {
  if (horizon < 1 || horizon > 20) {
    throw std::invalid_argument(
        "RademacherExpectedWalk: horizon must lie in 1..20");
  }
  const std::uint32_t patterns = 1u << horizon;
  std::uint64_t total = 0;
  for (std::uint32_t bits = 0; bits < patterns; ++bits) {
    const int ups = std::popcount(bits);
    total += static_cast<std::uint64_t>(std::abs(2 * ups - horizon));
  }
  return static_cast<double>(total) / static_cast<double>(patterns);
}

double FStarOfRun(std::span<const std::vector<CostFunction>> functions,
                  VecView x_star) {
  if (functions.empty()) return 0.0;
  double total = 0.0;
  for (const auto& round : functions) {
    double s = 0.0;
    for (const CostFunction& f : round) s += f.Value(x_star);
    total += s / static_cast<double>(round.size());
  }
  return total / static_cast<double>(functions.size());
}

}  // namespace fedbco
