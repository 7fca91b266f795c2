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

#ifndef FEDBCO_ALGORITHMS_H_
#define FEDBCO_ALGORITHMS_H_

#include <cstdint>
#include <span>
#include <string>

#include "fedbco/oracles.h"
#include "fedbco/rng.h"
#include "fedbco/schedules.h"
#include "fedbco/vecgeom.h"

namespace fedbco {

enum class Algorithm {
  kNcOgd,              // independent OGD, exact gradients
  kNcOgdOnePoint,      // independent projected OGD, one-point estimator
  kNcOgdTwoPoint,      // independent OGD, two-point estimator
  kFedPosgd,           // federated, one-point, lazy projection
  kFedOsgd,            // federated, two-point
  kFedOsgdFirstOrder,  // federated, noisy first-order oracle
};

enum class OracleKind { kFirstOrder, kNoisyFirstOrder, kOnePoint, kTwoPoint };

std::string ToString(Algorithm algorithm);
Algorithm ParseAlgorithm(const std::string& name);
std::string ToString(OracleKind oracle);
OracleKind ParseOracleKind(const std::string& name);

OracleKind RequiredOracle(Algorithm algorithm);
bool IsFederated(Algorithm algorithm);
// Loss entries per machine per round: 2 for two-point feedback, else 1.
int QueriesPerRound(Algorithm algorithm);

// Per-machine learner state. The iterate of the lazy-projection learner
// lives in unprojected space; projection only forms the query point.
struct MachineState {
  int id = 0;
  Vec x;
  RngStream rng;
};

// Fresh state with x_0 = 0 and the machine's own stream.
MachineState InitialMachineState(int id, std::size_t dim, std::uint64_t seed);

// What one local step observed and the norm of the vector it stepped along.
struct StepOutcome {
  OracleReply reply;
  double step_norm = 0.0;
};

// Play x, incur f(x), then x <- x - eta grad f(x).
StepOutcome StepNcOgd(MachineState& state, const CostFunction& f, double eta);

// Projected one-point OGD: w = Proj(x), query w + delta u, then
// x <- Proj(w - eta g).
StepOutcome StepNcOgdOnePoint(MachineState& state, const CostFunction& f,
                              const Schedule& schedule, double radius);

// w = Proj(x), query w + delta u, g = d f(w + delta u) u / delta, then
// x <- x - eta g in unprojected space.
StepOutcome StepFedPosgd(MachineState& state, const CostFunction& f,
                         const Schedule& schedule, double radius);

// Query x +/- delta u and step along the two-point estimate. Also serves the
// non-collaborative two-point baseline, which simply never communicates.
StepOutcome StepFedOsgd(MachineState& state, const CostFunction& f,
                        const Schedule& schedule);

// Play x, incur f(x), step along grad f(x) + noise with E|noise|^2 = sigma^2.
StepOutcome StepFedOsgdFirstOrder(MachineState& state, const CostFunction& f,
                                  const Schedule& schedule, double sigma);

// Replace every iterate by the mean of the post-update iterates. Must be
// called exactly when (t + 1) % local_steps == 0; throws std::logic_error
// otherwise.
void Communicate(std::span<MachineState> states, long t, int local_steps);

}  // namespace fedbco

#endif  // FEDBCO_ALGORITHMS_H_
