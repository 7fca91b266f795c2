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

#include "fedbco/estimators.h"

#include <cmath>
#include <stdexcept>

namespace fedbco {
namespace {

void CheckDelta(double delta, const char* who) {
  if (!(delta > 0.0) || !std::isfinite(delta)) {
    throw std::invalid_argument(std::string(who) + ": delta must be > 0");
  }
}

Vec Shifted(VecView x, double alpha, VecView u) {
  Vec out(x.begin(), x.end());
  Axpy(alpha, u, out);
  return out;
}

}  // namespace

ZoQuery OnePointEstimateAlong(const CostFunction& f, VecView w, double delta,
                              VecView u) {
  CheckDelta(delta, "OnePointEstimate");
  CheckSameDim(w, u, "OnePointEstimate");
  ZoQuery q;
  q.center.assign(w.begin(), w.end());
  q.direction.assign(u.begin(), u.end());
  q.delta = delta;
  q.query_points.push_back(Shifted(w, delta, u));
  q.values.push_back(f.Value(q.query_points[0]));
  const double d = static_cast<double>(w.size());
  q.estimate = Scaled(u, d * q.values[0] / delta);
  return q;
}

ZoQuery TwoPointEstimateAlong(const CostFunction& f, VecView x, double delta,
                              VecView u) {
  CheckDelta(delta, "TwoPointEstimate");
  CheckSameDim(x, u, "TwoPointEstimate");
  ZoQuery q;
  q.center.assign(x.begin(), x.end());
  q.direction.assign(u.begin(), u.end());
  q.delta = delta;
  q.query_points.push_back(Shifted(x, delta, u));
  q.query_points.push_back(Shifted(x, -delta, u));
  q.values.push_back(f.Value(q.query_points[0]));
  q.values.push_back(f.Value(q.query_points[1]));
  const double d = static_cast<double>(x.size());
  q.estimate = Scaled(u, d * (q.values[0] - q.values[1]) / (2.0 * delta));
  return q;
}

ZoQuery OnePointEstimate(const CostFunction& f, VecView w, double delta,
                         RngStream& rng) {
  CheckDelta(delta, "OnePointEstimate");
  const Vec u = SampleUnitSphere(rng, w.size());
  return OnePointEstimateAlong(f, w, delta, u);
}

ZoQuery TwoPointEstimate(const CostFunction& f, VecView x, double delta,
                         RngStream& rng) {
  CheckDelta(delta, "TwoPointEstimate");
  const Vec u = SampleUnitSphere(rng, x.size());
  return TwoPointEstimateAlong(f, x, delta, u);
}

double SmoothedValue(const CostFunction& f, VecView x, double delta,
                     int n_samples, RngStream& rng) {
  if (n_samples <= 0) {
    throw std::invalid_argument("SmoothedValue: n_samples must be positive");
  }
  CheckSameDim(x, Vec(f.dim()), "SmoothedValue");
  double sum = 0.0;
  Vec point(x.size());
  for (int i = 0; i < n_samples; ++i) {
    const Vec u = SampleUnitSphere(rng, x.size());
    for (std::size_t k = 0; k < x.size(); ++k) point[k] = x[k] + delta * u[k];
    sum += f.Value(point);
  }
  return sum / n_samples;
}

}  // namespace fedbco
