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
#include <vector>

#include "doctest.h"

namespace fedbco {
namespace {

TEST_CASE("documented estimator examples") {
  const CostFunction f = CostFunction::Linear({1.0, 0.0}, 1.0);
  CHECK(OnePointEstimateAlong(f, Vec{0.0, 0.0}, 1.0, Vec{0.0, 1.0}).estimate ==
        Vec{0.0, 0.0});
  CHECK(OnePointEstimateAlong(f, Vec{0.0, 0.0}, 1.0, Vec{1.0, 0.0}).estimate ==
        Vec{2.0, 0.0});
  CHECK(TwoPointEstimateAlong(f, Vec{0.3, -0.7}, 0.5, Vec{0.0, 1.0}).estimate ==
        Vec{0.0, 0.0});
  const Vec g =
      TwoPointEstimateAlong(f, Vec{0.3, -0.7}, 0.5, Vec{1.0, 0.0}).estimate;
  CHECK(g[0] == doctest::Approx(2.0).epsilon(1e-14));
  CHECK(g[1] == 0.0);
}

TEST_CASE("estimates along a fixed direction") {
  const CostFunction f = CostFunction::Linear({1.0, 0.0}, 1.0);
  const ZoQuery one = OnePointEstimateAlong(f, Vec{0.0, 0.0}, 0.5, Vec{1.0, 0.0});
  CHECK(one.query_points.size() == 1);
  CHECK(one.query_points[0] == Vec{0.5, 0.0});
  CHECK(one.values[0] == doctest::Approx(0.5));
  CHECK(one.estimate == Vec{2.0, 0.0});

  const ZoQuery two = TwoPointEstimateAlong(f, Vec{0.0, 0.0}, 0.5, Vec{1.0, 0.0});
  CHECK(two.query_points.size() == 2);
  CHECK(two.query_points[0] == Vec{0.5, 0.0});
  CHECK(two.query_points[1] == Vec{-0.5, 0.0});
  CHECK(two.estimate == Vec{2.0, 0.0});

  CHECK_THROWS_AS(OnePointEstimateAlong(f, Vec{0.0, 0.0}, 0.0, Vec{1.0, 0.0}),
                  std::invalid_argument);
  CHECK_THROWS_AS(TwoPointEstimateAlong(f, Vec{0.0, 0.0}, -1.0, Vec{1.0, 0.0}),
                  std::invalid_argument);
}

TEST_CASE("estimators are unbiased for linear costs") {
  constexpr std::size_t d = 8;
  const double g = 1.0;
  RngStream rng(11, 0);
  const CostFunction f = CostFunction::Linear(Scaled(SampleUnitSphere(rng, d), g), g);
  const Vec w = SampleBall(rng, d, 1.0);
  const long n = 1000000;
  Vec one_mean(d, 0.0);
  Vec two_mean(d, 0.0);
  double one_max = 0.0;
  double two_max = 0.0;
  double two_mse = 0.0;
  for (long i = 0; i < n; ++i) {
    const ZoQuery a = OnePointEstimate(f, w, 1.0, rng);
    const ZoQuery b = TwoPointEstimate(f, w, 0.5, rng);
    Axpy(1.0 / n, a.estimate, one_mean);
    Axpy(1.0 / n, b.estimate, two_mean);
    one_max = std::max(one_max, Norm(a.estimate));
    two_max = std::max(two_max, Norm(b.estimate));
    two_mse += SquaredNorm(Sub(b.estimate, f.beta())) / n;
  }
  const double dd = static_cast<double>(d);
  CHECK(Distance(one_mean, f.beta()) <= 6.0 * 2.0 * dd * g / std::sqrt(n));
  CHECK(Distance(two_mean, f.beta()) <= 6.0 * dd * g / std::sqrt(n));
  CHECK(one_max <= 2.0 * dd * g * (1.0 + 1e-12));
  CHECK(two_max <= dd * g * (1.0 + 1e-12));
  CHECK(two_mse <= 2.0 * dd * g * g);
}

TEST_CASE("recorded query points are the evaluated points") {
  std::vector<Vec> seen;
  const CostFunction f = CostFunction::Custom(
      3,
      [&seen](VecView x) {
        seen.emplace_back(x.begin(), x.end());
        return x[0] + 2.0 * x[1];
      },
      [](VecView) { return Vec{1.0, 2.0, 0.0}; }, 3.0);
  RngStream rng(12, 0);
  const ZoQuery one = OnePointEstimate(f, Vec{0.1, 0.2, 0.3}, 0.25, rng);
  REQUIRE(seen.size() == 1);
  CHECK(seen[0] == one.query_points[0]);
  seen.clear();
  const ZoQuery two = TwoPointEstimate(f, Vec{0.1, 0.2, 0.3}, 0.25, rng);
  REQUIRE(seen.size() == 2);
  CHECK(seen[0] == two.query_points[0]);
  CHECK(seen[1] == two.query_points[1]);
  CHECK(Norm(two.direction) == doctest::Approx(1.0));
}

TEST_CASE("smoothed value") {
  RngStream rng(13, 0);
  const CostFunction linear = CostFunction::Linear({0.5, 0.5}, 1.0);
  // Linear costs are their own smoothing.
  CHECK(SmoothedValue(linear, Vec{1.0, 1.0}, 0.5, 100000, rng) ==
        doctest::Approx(1.0).epsilon(0.01));
  // E|x + delta u|^2 / 2 = |x|^2 / 2 + delta^2 / 2 inside the quadratic zone.
  const CostFunction quad = CostFunction::HuberQuadratic({0.0, 0.0}, 1.0, 10.0);
  CHECK(SmoothedValue(quad, Vec{1.0, 0.0}, 0.5, 100000, rng) ==
        doctest::Approx(0.625).epsilon(0.01));
  // Huber smoothing gap is at most G delta.
  const CostFunction huber = CostFunction::HuberQuadratic({0.2, 0.1}, 2.0, 1.0);
  const Vec x{0.9, -0.4};
  CHECK(std::abs(SmoothedValue(huber, x, 0.3, 100000, rng) - Eval(huber, x)) <=
        0.3 + 0.01);
  CHECK(SmoothedValue(huber, x, 1e-6, 100, rng) ==
        doctest::Approx(Eval(huber, x)).epsilon(1e-5));
  CHECK_THROWS_AS(SmoothedValue(quad, Vec{1.0, 0.0}, 0.5, 0, rng),
                  std::invalid_argument);
}

}  // namespace
}  // namespace fedbco
