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

#ifndef FEDBCO_SCHEDULES_H_
#define FEDBCO_SCHEDULES_H_

#include <cstddef>
#include <optional>
#include <string>

namespace fedbco {

// Which step-size rule produced a schedule.
enum class ScheduleSource {
  kOnePoint,        // one-point federated linear bandits
  kTwoPoint,        // two-point, Lipschitz
  kTwoPointSmooth,  // two-point, Lipschitz and smooth
  kFirstOrder,      // noisy first-order oracle, Lipschitz
  kSmooth,          // noisy first-order oracle, Lipschitz and smooth
  kManual,
};

std::string ToString(ScheduleSource source);

// Constant step size and smoothing radius.
struct Schedule {
  double eta = 0.0;
  double delta = 0.0;
  ScheduleSource source = ScheduleSource::kManual;
  // Which branch of a min/max expression was active, for the run log.
  std::string note;

  friend bool operator==(const Schedule&, const Schedule&) = default;
};

// Throws ConfigError unless eta > 0 and delta >= 0.
Schedule ManualSchedule(double eta, double delta);

// One-point rule with the variance sigma = 2 d G substituted:
//   eta = B/(G sqrt T) * min{1, G sqrt(M)/sigma,
//                            [K>1] sqrt(G)/(sqrt(sigma) K^{1/4}),
//                            [K>1, zeta>0] sqrt(G)/sqrt(zeta K)},
//   delta = B.
Schedule ScheduleOnePoint(double g, double b, long horizon, int machines,
                          int local_steps, std::size_t dim, double zeta);

// The same rule with the min terms sqrt(M)/(dB) and 1/(sqrt(dB) K^{1/4})
// in place of the sigma-based ones. Reported as a manual schedule.
Schedule ScheduleOnePointAlt(double g, double b, long horizon, int machines,
                             int local_steps, std::size_t dim, double zeta);

// Two-point rule:
//   eta = B/(G sqrt T) * min{1, sqrt(M/d), [K>1] 1/(sqrt(K) d^{1/4})},
//   delta = B d^{1/4}/sqrt(R) * (1 + d^{1/4}/sqrt(M K)).
// Throws ConfigError when T != K R.
Schedule ScheduleTwoPoint(double g, double b, long horizon, int machines,
                          int local_steps, std::size_t dim, long rounds);

// Noisy first-order rule:
//   eta = B/(G sqrt T) * min{1, G sqrt(M)/sigma, [K>1] sqrt(G)/sqrt(sigma K),
//                            [K>1] 1/sqrt(K)},  delta = 0.
Schedule ScheduleFirstOrder(double g, double b, long horizon, int machines,
                        int local_steps, double sigma);

struct SmoothScheduleInputs {
  double g = 1.0;
  double b = 1.0;
  long horizon = 1;
  int machines = 1;
  int local_steps = 1;
  long rounds = 1;
  double smooth_h = 0.0;
  std::optional<double> fstar;
  double sigma = 0.0;
  double zeta = 0.0;
};

// Smooth-case rule, evaluated term by term:
//   eta = min{ 1/(2H),  B sqrt(M)/(sigma sqrt(KR)),
//              max{B/(G sqrt(KR)), B/sqrt(H F* KR)},
//              [K>1] max{ min{B^{2/3}/(H^{1/3} sigma^{2/3} K^{2/3} R^{1/3}),
//                             B^{2/3}/(H^{1/3} zeta^{2/3} K R^{1/3}),
//                             B/(K^{3/4} sqrt(zeta sigma R)),
//                             B/(zeta K sqrt(R))},
//                         min{B/(K^{3/4} sqrt(G sigma R)),
//                             B/(K sqrt(zeta G R))} } }.
// A term whose denominator vanishes (H, sigma, zeta or F* equal to zero, or
// F* unknown) is dropped, i.e. treated as +inf. With H = 0 this is the linear
// two-point schedule. `delta` is passed through unchanged.
// Throws ConfigError for negative H.
Schedule ScheduleSmooth(const SmoothScheduleInputs& in, double delta = 0.0);

}  // namespace fedbco

#endif  // FEDBCO_SCHEDULES_H_
