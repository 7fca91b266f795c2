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

#include <algorithm>
#include <cmath>
#include <limits>

#include "doctest.h"
#include "fedbco/errors.h"

namespace fedbco {
namespace {

TEST_CASE("one-point schedule example") {
  const Schedule s = ScheduleOnePoint(1.0, 1.0, 100, 4, 1, 2, 0.0);
  CHECK(s.eta == doctest::Approx(0.05).epsilon(1e-15));
  CHECK(s.delta == 1.0);
  CHECK(s.source == ScheduleSource::kOnePoint);
  // With K = 1 only {1, G sqrt(M) / sigma} compete, whatever zeta is.
  CHECK(ScheduleOnePoint(1.0, 1.0, 100, 4, 1, 2, 1.5) == s);
  CHECK_THROWS_AS(ScheduleOnePoint(0.0, 1.0, 100, 4, 1, 2, 0.0), ConfigError);
  CHECK_THROWS_AS(ScheduleOnePoint(1.0, -1.0, 100, 4, 1, 2, 0.0), ConfigError);
  CHECK_THROWS_AS(ScheduleOnePoint(1.0, 1.0, 0, 4, 1, 2, 0.0), ConfigError);
}

TEST_CASE("two-point schedule examples") {
  const Schedule a = ScheduleTwoPoint(1.0, 1.0, 100, 4, 1, 16, 100);
  CHECK(a.eta == doctest::Approx(0.05).epsilon(1e-15));
  CHECK(a.delta == doctest::Approx(0.4).epsilon(1e-15));
  for (int m : {1, 3, 10}) {
    CHECK(ScheduleTwoPoint(1.0, 1.0, 100, m, 1, 1, 100).eta ==
          doctest::Approx(0.1).epsilon(1e-15));
  }
  const Schedule b = ScheduleTwoPoint(1.0, 1.0, 100, 1, 4, 16, 25);
  CHECK(b.eta == doctest::Approx(0.025).epsilon(1e-15));
  CHECK_THROWS_AS(ScheduleTwoPoint(1.0, 1.0, 100, 1, 4, 16, 24), ConfigError);
}

TEST_CASE("first-order schedule") {
  // sigma = 0 drops the variance and consensus terms.
  CHECK(ScheduleFirstOrder(1.0, 1.0, 100, 2, 1, 0.0).eta ==
        doctest::Approx(0.1).epsilon(1e-15));
  CHECK(ScheduleFirstOrder(1.0, 1.0, 100, 2, 4, 0.0).eta ==
        doctest::Approx(0.05).epsilon(1e-15));
  CHECK(ScheduleFirstOrder(1.0, 1.0, 100, 1, 1, 2.0).eta ==
        doctest::Approx(0.05).epsilon(1e-15));
  CHECK(ScheduleFirstOrder(1.0, 1.0, 100, 1, 1, 0.0).delta == 0.0);
}

TEST_CASE("smooth schedule reduces to the linear rule") {
  for (double sigma : {0.5, 1.0, 4.0}) {
    SmoothScheduleInputs in;
    in.g = 1.5;
    in.b = 2.0;
    in.horizon = 400;
    in.rounds = 400;
    in.machines = 3;
    in.sigma = sigma;
    const double t = 400.0;
    const double expected = std::min(in.b * std::sqrt(3.0) / (sigma * std::sqrt(t)),
                                     in.b / (in.g * std::sqrt(t)));
    CHECK(ScheduleSmooth(in).eta == doctest::Approx(expected).epsilon(1e-14));
  }
}

TEST_CASE("smooth schedule respects the smoothness cap") {
  for (double h : {0.01, 0.5, 1.0, 10.0, 1000.0}) {
    for (int k : {1, 4, 16}) {
      SmoothScheduleInputs in;
      in.smooth_h = h;
      in.local_steps = k;
      in.rounds = 10;
      in.horizon = 10L * k;
      in.sigma = 0.3;
      in.zeta = 0.2;
      in.fstar = 0.5;
      CHECK(ScheduleSmooth(in).eta <= 1.0 / (2.0 * h));
    }
  }
  SmoothScheduleInputs bad;
  bad.smooth_h = -1.0;
  CHECK_THROWS_AS(ScheduleSmooth(bad), ConfigError);
}

// Independent transcription of the smooth-case expression.
double ReferenceSmooth(double g, double b, double k, double r, double m,
                       double h, double fstar, double sigma, double zeta) {
  const double kr = k * r;
  const double t1 = 1.0 / (2.0 * h);
  const double t2 = b * std::sqrt(m) / (sigma * std::sqrt(kr));
  const double t3 =
      std::max(b / (g * std::sqrt(kr)), b / std::sqrt(h * fstar * kr));
  const double a1 = std::pow(b, 2.0 / 3.0) /
                    (std::pow(h, 1.0 / 3.0) * std::pow(sigma, 2.0 / 3.0) *
                     std::pow(k, 2.0 / 3.0) * std::pow(r, 1.0 / 3.0));
  const double a2 = std::pow(b, 2.0 / 3.0) /
                    (std::pow(h, 1.0 / 3.0) * std::pow(zeta, 2.0 / 3.0) * k *
                     std::pow(r, 1.0 / 3.0));
  const double a3 = b / (std::pow(k, 0.75) * std::sqrt(zeta * sigma * r));
  const double a4 = b / (zeta * k * std::sqrt(r));
  const double c1 = b / (std::pow(k, 0.75) * std::sqrt(g * sigma * r));
  const double c2 = b / (k * std::sqrt(zeta * g * r));
  const double t4 = std::max(std::min({a1, a2, a3, a4}), std::min(c1, c2));
  return std::min({t1, t2, t3, t4});
}

TEST_CASE("smooth schedule matches a reference transcription") {
  SmoothScheduleInputs in;
  in.g = 1.0;
  in.b = 1.0;
  in.sigma = 1.0;
  in.smooth_h = 1.0;
  in.fstar = 1.0;
  in.zeta = 0.1;
  in.local_steps = 4;
  in.rounds = 25;
  in.horizon = 100;
  in.machines = 2;
  const double ref = ReferenceSmooth(1.0, 1.0, 4.0, 25.0, 2.0, 1.0, 1.0, 1.0, 0.1);
  CHECK(std::abs(ScheduleSmooth(in).eta - ref) <= 1e-12);
  CHECK(ScheduleSmooth(in, 0.25).delta == 0.25);
}

TEST_CASE("schedules are pure") {
  SmoothScheduleInputs in;
  in.smooth_h = 0.7;
  in.sigma = 0.4;
  in.zeta = 0.3;
  in.local_steps = 8;
  in.rounds = 32;
  in.horizon = 256;
  in.fstar = 0.2;
  CHECK(ScheduleSmooth(in) == ScheduleSmooth(in));
  CHECK(ScheduleOnePoint(1.0, 1.0, 256, 4, 8, 16, 0.5) ==
        ScheduleOnePoint(1.0, 1.0, 256, 4, 8, 16, 0.5));
  CHECK(ScheduleTwoPoint(1.0, 1.0, 256, 4, 8, 16, 32) ==
        ScheduleTwoPoint(1.0, 1.0, 256, 4, 8, 16, 32));
}

TEST_CASE("manual schedule") {
  const Schedule s = ManualSchedule(0.1, 0.2);
  CHECK(s.eta == 0.1);
  CHECK(s.delta == 0.2);
  CHECK(s.source == ScheduleSource::kManual);
  CHECK_THROWS_AS(ManualSchedule(0.0, 0.2), ConfigError);
  CHECK_THROWS_AS(ManualSchedule(0.1, -0.2), ConfigError);
}

}  // namespace
}  // namespace fedbco
