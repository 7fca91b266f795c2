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

#ifndef FEDBCO_ADVERSARIES_H_
#define FEDBCO_ADVERSARIES_H_

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "fedbco/oracles.h"
#include "fedbco/rng.h"
#include "fedbco/vecgeom.h"

namespace fedbco {

enum class AdversaryKind {
  kStochasticLinear,
  kAdaptiveLinear,
  kStochasticHuber,
  kRademacherLinear,
};

// How an adaptive linear adversary uses the history.
enum class TargetingRule {
  // Shared coefficient aligned with the previous round's mean played point;
  // per-machine offsets frozen at construction.
  kMeanIterate,
  // Shared part as above; per-machine offsets aligned with each machine's
  // previous deviation from the mean, rescaled to RMS zeta every round.
  kMeanAndDeviation,
};

std::string ToString(AdversaryKind kind);
AdversaryKind ParseAdversaryKind(const std::string& name);
std::string ToString(TargetingRule rule);
TargetingRule ParseTargetingRule(const std::string& name);

struct AdversarySpec {
  AdversaryKind kind = AdversaryKind::kStochasticLinear;
  double lipschitz_g = 1.0;
  double zeta = 0.0;
  std::size_t dim = 1;
  int machines = 1;

  // Stochastic linear: fraction in [0, 1] of the shared coefficient that
  // points along a fixed random direction; the rest is a fresh sphere draw.
  double mean_scale = 0.0;
  TargetingRule targeting = TargetingRule::kMeanIterate;

  // Stochastic Huber: centers c_t = c0 + center_jitter * u_t with
  // |c0| = center_norm, plus frozen per-machine offsets of RMS zeta / H.
  double smooth_h = 1.0;
  double center_norm = 0.5;
  double center_jitter = 0.25;
};

// Models played and functions emitted for every completed round. The
// adversary only ever reads rounds strictly before the one it is emitting.
class History {
 public:
  // With retain_all == false only the most recent round is kept.
  explicit History(bool retain_all = true) : retain_all_(retain_all) {}

  void Append(std::vector<Vec> models, std::vector<CostFunction> functions);

  long rounds() const { return rounds_; }
  bool retains_all() const { return retain_all_; }
  // Models of the most recent round; empty before round 0 completes.
  const std::vector<Vec>& LastModels() const;
  const std::vector<std::vector<Vec>>& models() const { return models_; }
  const std::vector<std::vector<CostFunction>>& functions() const {
    return functions_;
  }
  // Drops stored functions after moving them out.
  std::vector<std::vector<CostFunction>> TakeFunctions();
  // Returns a copy truncated to the first `rounds` rounds. Requires
  // retains_all().
  History Truncated(long rounds) const;

 private:
  bool retain_all_;
  long rounds_ = 0;
  std::vector<std::vector<Vec>> models_;
  std::vector<std::vector<CostFunction>> functions_;
};

// Generator of per-round, per-machine cost functions {f_t^m}.
class Adversary {
 public:
  // Throws ConfigError if (zeta, G) is infeasible: zeta < 0, zeta > 2G, or a
  // Rademacher adversary with zeta > 0.
  Adversary(const AdversarySpec& spec, std::uint64_t seed);

  // Requires hist.rounds() == t.
  std::vector<CostFunction> EmitRound(long t, const History& hist) const;

  // Oblivious adversaries only: the functions of round t, depending on
  // (seed, t) alone.
  std::vector<CostFunction> EmitOblivious(long t) const;

  bool oblivious() const;
  const AdversarySpec& spec() const { return spec_; }
  double shared_radius() const { return shared_radius_; }
  // Heterogeneity actually realized by the frozen offsets (<= zeta).
  double realized_zeta() const { return realized_zeta_; }
  const std::vector<Vec>& offsets() const { return offsets_; }

 private:
  std::vector<CostFunction> LinearFromShared(const Vec& shared) const;
  std::vector<CostFunction> EmitDeviationTargeted(const Vec& direction,
                                                  const History& hist) const;

  AdversarySpec spec_;
  RngStream base_;
  std::vector<Vec> offsets_;
  Vec mean_direction_;
  double shared_radius_ = 0.0;
  double realized_zeta_ = 0.0;
};

// (1/M) sum_m |v_m - mean(v)|^2.
double Heterogeneity(std::span<const Vec> vs);

// Zero-mean offsets with RMS `rms`, drawn from centered Gaussians. When
// count == 1 the single offset is zero.
std::vector<Vec> DrawCenteredOffsets(RngStream& rng, int count,
                                     std::size_t dim, double rms);

// E|sum_{t<=T} u_t| for i.i.d. Rademacher u_t by exhaustive enumeration of
// all 2^T sign patterns. Throws std::invalid_argument for T < 1 or T > 20.
double RademacherExpectedWalk(int horizon);

// (1/T) sum_t f_t(x_star), f_t being the machine average at round t.
double FStarOfRun(std::span<const std::vector<CostFunction>> functions,
                  VecView x_star);

}  // namespace fedbco

#endif  // FEDBCO_ADVERSARIES_H_
