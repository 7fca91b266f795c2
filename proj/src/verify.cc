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

// Statistical oracle suite behind `fedbco verify`.

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <string>
#include <vector>

#include "fedbco/adversaries.h"
#include "fedbco/harness.h"

namespace fedbco {
namespace {

// Width of the Monte-Carlo acceptance band in standard errors.
constexpr double kMcRadius = 5.0;

std::string Describe(const char* what, double observed, const char* rel,
                     double bound) {
  std::ostringstream s;
  s << what << " = " << observed << ' ' << rel << ' ' << bound;
  return s.str();
}

VerifyCheck SphereMoment(std::size_t d, long samples, RngStream rng) {
  // Upper triangle of sum u u^T.
  std::vector<double> acc(d * d, 0.0);
  for (long n = 0; n < samples; ++n) {
    const Vec u = SampleUnitSphere(rng, d);
    for (std::size_t i = 0; i < d; ++i) {
      const double ui = u[i];
      double* row = &acc[i * d];
      for (std::size_t j = i; j < d; ++j) row[j] += ui * u[j];
    }
  }
  double worst = 0.0;
  const double target = 1.0 / static_cast<double>(d);
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = i; j < d; ++j) {
      const double m = acc[i * d + j] / static_cast<double>(samples);
      worst = std::max(worst, std::abs(m - (i == j ? target : 0.0)));
    }
  }
  VerifyCheck c;
  c.name = "sphere_second_moment_d" + std::to_string(d);
  c.observed = worst;
  c.bound = 0.005;
  c.passed = worst <= c.bound;
  c.detail = Describe("max |E[uu^T] - I/d|", worst, "<=", c.bound);
  return c;
}

struct EstimatorStats {
  double mean_error = 0.0;   // |sample mean - beta|
  double mean_radius = 0.0;  // kMcRadius * sqrt(trace(cov) / N)
  double mse = 0.0;          // mean |g - beta|^2
  double max_norm = 0.0;
};

EstimatorStats Sample(const OnePointFn& estimator, const CostFunction& f,
                      const Vec& center, double delta, long samples,
                      RngStream& rng) {
  const std::size_t d = f.dim();
  const Vec& beta = f.beta();
  Vec sum(d, 0.0);
  double sum_sq = 0.0;  // sum |g|^2
  double mse = 0.0;
  double max_norm = 0.0;
  for (long n = 0; n < samples; ++n) {
    const ZoQuery q = estimator(f, center, delta, rng);
    Axpy(1.0, q.estimate, sum);
    const double sq = SquaredNorm(q.estimate);
    sum_sq += sq;
    max_norm = std::max(max_norm, std::sqrt(sq));
    mse += SquaredNorm(Sub(q.estimate, beta));
  }
  const double nn = static_cast<double>(samples);
  const Vec mean = Scaled(sum, 1.0 / nn);
  EstimatorStats s;
  s.mean_error = Distance(mean, beta);
  const double trace_cov = std::max(0.0, sum_sq / nn - SquaredNorm(mean));
  s.mean_radius = kMcRadius * std::sqrt(trace_cov / nn);
  s.mse = mse / nn;
  s.max_norm = max_norm;
  return s;
}

CostFunction RandomLinear(std::size_t d, double g, RngStream& rng) {
  return CostFunction::Linear(Scaled(SampleUnitSphere(rng, d), g), g);
}

void EstimatorChecks(const VerifyOptions& o, std::size_t d, RngStream rng,
                     std::vector<VerifyCheck>& out) {
  constexpr double kG = 1.0;
  constexpr double kB = 1.0;
  const std::string suffix = "_d" + std::to_string(d);
  const double dd = static_cast<double>(d);

  {
    const CostFunction f = RandomLinear(d, kG, rng);
    const Vec w = SampleBall(rng, d, kB);
    const EstimatorStats s =
        Sample(o.one_point, f, w, kB, o.estimator_samples, rng);
    VerifyCheck mean;
    mean.name = "one_point_unbiased" + suffix;
    mean.observed = s.mean_error;
    mean.bound = s.mean_radius;
    mean.passed = s.mean_error <= s.mean_radius;
    mean.detail = Describe("|mean(g) - beta|", s.mean_error, "<=", s.mean_radius);
    out.push_back(mean);

    VerifyCheck norm;
    norm.name = "one_point_norm_bound" + suffix;
    norm.observed = s.max_norm;
    norm.bound = 2.0 * dd * kG;
    norm.passed = s.max_norm <= norm.bound * (1.0 + 1e-12);
    norm.detail = Describe("max |g|", s.max_norm, "<= 2dG =", norm.bound);
    out.push_back(norm);
  }
  {
    const CostFunction f = RandomLinear(d, kG, rng);
    const Vec x = SampleBall(rng, d, kB);
    const EstimatorStats s =
        Sample(o.two_point, f, x, 0.5 * kB, o.estimator_samples, rng);
    VerifyCheck mean;
    mean.name = "two_point_unbiased" + suffix;
    mean.observed = s.mean_error;
    mean.bound = s.mean_radius;
    mean.passed = s.mean_error <= s.mean_radius;
    mean.detail = Describe("|mean(g) - beta|", s.mean_error, "<=", s.mean_radius);
    out.push_back(mean);

    VerifyCheck var;
    var.name = "two_point_variance" + suffix;
    var.observed = s.mse;
    var.bound = 2.0 * dd * kG * kG;
    var.passed = s.mse <= var.bound;
    var.detail = Describe("E|g - beta|^2", s.mse, "<= 2dG^2 =", var.bound);
    out.push_back(var);
  }
}

VerifyCheck PotentialCheck(long pairs, RngStream rng) {
  constexpr std::size_t kDim = 8;
  constexpr double kB = 1.0;
  double worst = std::numeric_limits<double>::infinity();
  for (long n = 0; n < pairs; ++n) {
    const Vec x = SampleBall(rng, kDim, kB);
    // y inside or well outside the ball.
    const double scale = 3.0 * kB * rng.Uniform();
    const Vec y = Scaled(SampleUnitSphere(rng, kDim), scale);
    const Vec y_hat = ProjectL2Ball(y, kB);
    const double gap =
        LazyPotential(x, y, kB) - 0.5 * SquaredNorm(Sub(x, y_hat));
    worst = std::min(worst, gap);
  }
  VerifyCheck c;
  c.name = "lazy_potential_inequality";
  c.observed = worst;
  c.bound = -1e-12;
  c.passed = worst >= c.bound;
  c.detail = Describe("min d(x,y) - |x - y_hat|^2/2", worst, ">=", c.bound);
  return c;
}

VerifyCheck RademacherCheck(int horizon) {
  VerifyCheck c;
  c.name = "rademacher_walk_T" + std::to_string(horizon);
  c.observed = RademacherExpectedWalk(horizon);
  c.bound = std::sqrt(static_cast<double>(horizon)) / 2.0;
  c.passed = c.observed >= c.bound;
  c.detail = Describe("E|S_T|", c.observed, ">= sqrt(T)/2 =", c.bound);
  return c;
}

VerifyCheck ConsensusCheck(std::uint64_t seed) {
  RunConfig c;
  c.machines = 4;
  c.local_steps = 4;
  c.rounds = 64;
  c.dim = 8;
  c.zeta = 0.5;
  c.sigma = 1.0;
  c.algorithm = Algorithm::kFedOsgdFirstOrder;
  c.adversary.kind = AdversaryKind::kStochasticLinear;
  c.seed = seed;
  const RegretLedger ledger = Run(c);
  const double eta = ledger.schedule.eta;
  const double k = c.local_steps;
  VerifyCheck v;
  v.name = "consensus_bound";
  v.observed = ledger.ConsensusMean();
  v.bound = 1.5 * 2.0 * eta * (c.sigma * std::sqrt(k) + c.zeta * k);
  v.passed = v.observed <= v.bound;
  v.detail = Describe("mean consensus", v.observed,
                      "<= 1.5 * 2 eta (sigma sqrt K + zeta K) =", v.bound);
  return v;
}

}  // namespace

std::vector<VerifyCheck> RunVerify(const VerifyOptions& options) {
  std::vector<VerifyCheck> out;
  const RngStream root(options.seed, StreamTag("verify"));
  for (std::size_t d : {2u, 8u, 64u}) {
    out.push_back(SphereMoment(d, options.sphere_samples,
                               root.Substream(StreamTag("sphere") + d)));
  }
  for (std::size_t d : {2u, 8u, 64u}) {
    EstimatorChecks(options, d, root.Substream(StreamTag("estimator") + d),
                    out);
  }
  out.push_back(PotentialCheck(options.potential_pairs,
                               root.Substream(StreamTag("potential"))));
  for (int t = 1; t <= 16; ++t) out.push_back(RademacherCheck(t));
  out.push_back(ConsensusCheck(options.seed));
  return out;
}

}  // namespace fedbco
