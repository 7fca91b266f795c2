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

#ifndef FEDBCO_ESTIMATORS_H_
#define FEDBCO_ESTIMATORS_H_

#include <vector>

#include "fedbco/oracles.h"
#include "fedbco/rng.h"
#include "fedbco/vecgeom.h"

namespace fedbco {

// A zeroth-order gradient estimate together with the points at which the
// function was actually evaluated.
struct ZoQuery {
  Vec center;
  Vec direction;  // unit vector u
  double delta = 0.0;
  std::vector<Vec> query_points;
  std::vector<double> values;  // f at each query point, same order
  Vec estimate;
};

// g = (d / delta) f(w + delta u) u with u ~ Unif(S^{d-1}).
//
// Unbiased for linear f. With |w| <= B and delta = B the estimate obeys
// |g| <= 2 d G, so callers project w onto the ball before calling.
ZoQuery OnePointEstimate(const CostFunction& f, VecView w, double delta,
                         RngStream& rng);

// g = (d / (2 delta)) (f(x + delta u) - f(x - delta u)) u.
//
// Unbiased for the gradient of the spherically smoothed function
// f_hat(x) = E_u f(x + delta u); equals E g = beta exactly for linear f.
// Pointwise |g| <= d G for G-Lipschitz f.
ZoQuery TwoPointEstimate(const CostFunction& f, VecView x, double delta,
                         RngStream& rng);

// Same estimators with a caller-chosen direction. Used by tests and the
// verify suite.
ZoQuery OnePointEstimateAlong(const CostFunction& f, VecView w, double delta,
                              VecView u);
ZoQuery TwoPointEstimateAlong(const CostFunction& f, VecView x, double delta,
                              VecView u);

// Monte-Carlo estimate of f_hat(x) = E_u f(x + delta u) over n_samples
// sphere draws. Test-only helper.
double SmoothedValue(const CostFunction& f, VecView x, double delta,
                     int n_samples, RngStream& rng);

}  // namespace fedbco

#endif  // FEDBCO_ESTIMATORS_H_
