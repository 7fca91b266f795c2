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

#include "fedbco/algorithms.h"

#include <stdexcept>
#include <utility>
#include <vector>

#include "fedbco/estimators.h"

namespace fedbco {

std::string ToString(Algorithm algorithm) {
  switch (algorithm) {
    case Algorithm::kNcOgd:
      return "ncogd";
    case Algorithm::kNcOgdOnePoint:
      return "ncogd_one_point";
    case Algorithm::kNcOgdTwoPoint:
      return "ncogd_two_point";
    case Algorithm::kFedPosgd:
      return "fedposgd";
    case Algorithm::kFedOsgd:
      return "fedosgd";
    case Algorithm::kFedOsgdFirstOrder:
      return "fedosgd_first_order";
  }
  return "unknown";
}

Algorithm ParseAlgorithm(const std::string& name) {
  for (Algorithm a :
       {Algorithm::kNcOgd, Algorithm::kNcOgdOnePoint, Algorithm::kNcOgdTwoPoint,
        Algorithm::kFedPosgd, Algorithm::kFedOsgd,
        Algorithm::kFedOsgdFirstOrder}) {
    if (ToString(a) == name) return a;
  }
  throw std::invalid_argument("unknown algorithm '" + name + "'");
}

std::string ToString(OracleKind oracle) {
  switch (oracle) {
    case OracleKind::kFirstOrder:
      return "first_order";
    case OracleKind::kNoisyFirstOrder:
      return "noisy_first_order";
    case OracleKind::kOnePoint:
      return "one_point";
    case OracleKind::kTwoPoint:
      return "two_point";
  }
  return "unknown";
}

OracleKind ParseOracleKind(const std::string& name) {
  for (OracleKind o : {OracleKind::kFirstOrder, OracleKind::kNoisyFirstOrder,
                       OracleKind::kOnePoint, OracleKind::kTwoPoint}) {
    if (ToString(o) == name) return o;
  }
  throw std::invalid_argument("unknown oracle '" + name + "'");
}

OracleKind RequiredOracle(Algorithm algorithm) {
  switch (algorithm) {
    case Algorithm::kNcOgd:
      return OracleKind::kFirstOrder;
    case Algorithm::kNcOgdOnePoint:
    case Algorithm::kFedPosgd:
      return OracleKind::kOnePoint;
    case Algorithm::kNcOgdTwoPoint:
    case Algorithm::kFedOsgd:
      return OracleKind::kTwoPoint;
    case Algorithm::kFedOsgdFirstOrder:
      return OracleKind::kNoisyFirstOrder;
  }
  return OracleKind::kFirstOrder;
}

bool IsFederated(Algorithm algorithm) {
  return algorithm == Algorithm::kFedPosgd ||
         algorithm == Algorithm::kFedOsgd ||
         algorithm == Algorithm::kFedOsgdFirstOrder;
}

int QueriesPerRound(Algorithm algorithm) {
  return RequiredOracle(algorithm) == OracleKind::kTwoPoint ? 2 : 1;
}

MachineState InitialMachineState(int id, std::size_t dim,
                                 std::uint64_t seed) {
  const std::uint64_t stream =
      Mix64(StreamTag("machine") ^ static_cast<std::uint64_t>(id));
  return MachineState{id, Vec(dim, 0.0), RngStream(seed, stream)};
}

StepOutcome StepNcOgd(MachineState& state, const CostFunction& f, double eta) {
  Vec g = f.Gradient(state.x);
  GradientReply reply{state.x, f.Value(state.x), g};
  Axpy(-eta, g, state.x);
  return StepOutcome{std::move(reply), Norm(g)};
}

StepOutcome StepNcOgdOnePoint(MachineState& state, const CostFunction& f,
                              const Schedule& schedule, double radius) {
  const Vec w = ProjectL2Ball(state.x, radius);
  ZoQuery q = OnePointEstimate(f, w, schedule.delta, state.rng);
  Vec next = w;
  Axpy(-schedule.eta, q.estimate, next);
  state.x = ProjectL2Ball(next, radius);
  return StepOutcome{OneValueReply{std::move(q.query_points[0]), q.values[0]},
                     Norm(q.estimate)};
}

StepOutcome StepFedPosgd(MachineState& state, const CostFunction& f,
                         const Schedule& schedule, double radius) {
  const Vec w = ProjectL2Ball(state.x, radius);
  ZoQuery q = OnePointEstimate(f, w, schedule.delta, state.rng);
  Axpy(-schedule.eta, q.estimate, state.x);
  return StepOutcome{OneValueReply{std::move(q.query_points[0]), q.values[0]},
                     Norm(q.estimate)};
}

StepOutcome StepFedOsgd(MachineState& state, const CostFunction& f,
                        const Schedule& schedule) {
  ZoQuery q = TwoPointEstimate(f, state.x, schedule.delta, state.rng);
  Axpy(-schedule.eta, q.estimate, state.x);
  return StepOutcome{
      TwoValuesReply{std::move(q.query_points[0]), q.values[0],
                     std::move(q.query_points[1]), q.values[1]},
      Norm(q.estimate)};
}

StepOutcome StepFedOsgdFirstOrder(MachineState& state, const CostFunction& f,
                                  const Schedule& schedule, double sigma) {
  Vec g = NoisyGrad(f, state.x, sigma, state.rng);
  GradientReply reply{state.x, f.Value(state.x), g};
  Axpy(-schedule.eta, g, state.x);
  return StepOutcome{std::move(reply), Norm(g)};
}

void Communicate(std::span<MachineState> states, long t, int local_steps) {
  if (local_steps < 1 || (t + 1) % local_steps != 0) {
    throw std::logic_error("Communicate invoked off schedule at round " +
                           std::to_string(t));
  }
  if (states.size() <= 1) return;
  std::vector<Vec> iterates;
  iterates.reserve(states.size());
  for (const MachineState& s : states) iterates.push_back(s.x);
  const Vec mean = Mean(iterates);
  for (MachineState& s : states) s.x = mean;
}

}  // namespace fedbco
