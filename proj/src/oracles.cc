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

#include "fedbco/oracles.h"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <utility>

namespace fedbco {
namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

}  // namespace

CostFunction::CostFunction(Kind kind, std::size_t dim, double lipschitz_g,
                           double smooth_h)
    : kind_(std::move(kind)),
      dim_(dim),
      lipschitz_g_(lipschitz_g),
      smooth_h_(smooth_h) {}

CostFunction CostFunction::Linear(Vec beta, double lipschitz_g) {
  if (!(lipschitz_g > 0.0)) {
    throw std::invalid_argument("Linear: lipschitz_g must be positive");
  }
  if (beta.empty() || !AllFinite(beta)) {
    throw std::invalid_argument("Linear: beta must be finite and non-empty");
  }
  if (Norm(beta) > lipschitz_g * (1.0 + 1e-12)) {
    throw std::invalid_argument("Linear: |beta| exceeds lipschitz_g");
  }
  const std::size_t dim = beta.size();
  return CostFunction(LinearCost{std::move(beta)}, dim, lipschitz_g, 0.0);
}

CostFunction CostFunction::HuberQuadratic(Vec center, double smooth_h,
                                          double lipschitz_g) {
  if (!(lipschitz_g > 0.0) || !(smooth_h >= 0.0) || !std::isfinite(smooth_h)) {
    throw std::invalid_argument(
        "HuberQuadratic: need lipschitz_g > 0 and finite smooth_h >= 0");
  }
  if (center.empty() || !AllFinite(center)) {
    throw std::invalid_argument("HuberQuadratic: bad center");
  }
  const std::size_t dim = center.size();
  return CostFunction(HuberCost{std::move(center)}, dim, lipschitz_g,
                      smooth_h);
}

CostFunction CostFunction::Custom(std::size_t dim,
                                  std::function<double(VecView)> value,
                                  std::function<Vec(VecView)> gradient,
                                  double lipschitz_g, double smooth_h) {
  if (dim == 0 || !value || !gradient || !(lipschitz_g > 0.0)) {
    throw std::invalid_argument("Custom: bad arguments");
  }
  return CostFunction(CustomCost{std::move(value), std::move(gradient)}, dim,
                      lipschitz_g, smooth_h);
}

double CostFunction::Value(VecView x) const {
  if (x.size() != dim_) CheckSameDim(x, Vec(dim_), "Eval");
  return std::visit(
      Overloaded{
          [&](const LinearCost& c) { return Dot(c.beta, x); },
          [&](const HuberCost& c) {
            const double r = Distance(x, c.center);
            if (smooth_h_ == 0.0) return 0.0;
            // The kink itself takes the quadratic branch.
            if (r * smooth_h_ <= lipschitz_g_) return 0.5 * smooth_h_ * r * r;
            return lipschitz_g_ * r -
                   lipschitz_g_ * lipschitz_g_ / (2.0 * smooth_h_);
          },
          [&](const CustomCost& c) { return c.value(x); },
      },
      kind_);
}

Vec CostFunction::Gradient(VecView x) const {
  if (x.size() != dim_) CheckSameDim(x, Vec(dim_), "Grad");
  return std::visit(
      Overloaded{
          [&](const LinearCost& c) { return c.beta; },
          [&](const HuberCost& c) {
            Vec diff = Sub(x, c.center);
            const double r = Norm(diff);
            if (r * smooth_h_ <= lipschitz_g_) {
              for (double& v : diff) v *= smooth_h_;
            } else {
              for (double& v : diff) v *= lipschitz_g_ / r;
            }
            return diff;
          },
          [&](const CustomCost& c) { return c.gradient(x); },
      },
      kind_);
}

double Eval(const CostFunction& f, VecView x) { return f.Value(x); }

Vec Grad(const CostFunction& f, VecView x) { return f.Gradient(x); }

Vec NoisyGrad(const CostFunction& f, VecView x, double sigma,
              RngStream& rng) {
  if (!(sigma >= 0.0) || !std::isfinite(sigma)) {
    throw std::invalid_argument("NoisyGrad: sigma must be >= 0");
  }
  Vec g = f.Gradient(x);
  if (sigma == 0.0) return g;
  const double scale = sigma / std::sqrt(static_cast<double>(g.size()));
  for (double& v : g) v += scale * rng.Normal();
  return g;
}

int QueryCount(const OracleReply& reply) {
  return std::holds_alternative<TwoValuesReply>(reply) ? 2 : 1;
}

Vec SampleBall(RngStream& rng, std::size_t dim, double radius) {
  Vec u = SampleUnitSphere(rng, dim);
  const double r =
      radius * std::pow(rng.Uniform(), 1.0 / static_cast<double>(dim));
  for (double& v : u) v *= r;
  return u;
}

ClassCheck SpotCheckClass(const CostFunction& f, double radius, int pairs,
                          RngStream& rng) {
  constexpr double kRel = 1e-9;
  ClassCheck check;
  const double g = f.lipschitz_g();
  const double h = f.smooth_h();
  for (int i = 0; i < pairs; ++i) {
    const Vec x = SampleBall(rng, f.dim(), radius);
    const Vec y = SampleBall(rng, f.dim(), radius);
    const double dist = Distance(x, y);
    if (dist == 0.0) continue;
    const double fx = f.Value(x);
    const double fy = f.Value(y);

    const double lip = std::abs(fx - fy) / (g * dist);
    check.worst_lipschitz_ratio = std::max(check.worst_lipschitz_ratio, lip);
    if (lip > 1.0 + kRel) check.lipschitz_ok = false;

    if (std::isfinite(h)) {
      const double gap = Distance(f.Gradient(x), f.Gradient(y));
      const double ratio = h > 0.0 ? gap / (h * dist) : (gap > 0.0 ? 2.0 : 0.0);
      check.worst_smooth_ratio = std::max(check.worst_smooth_ratio, ratio);
      if (ratio > 1.0 + kRel) check.smooth_ok = false;
    }

    Vec mid = Add(x, y);
    for (double& v : mid) v *= 0.5;
    const double cgap = f.Value(mid) - 0.5 * (fx + fy);
    check.worst_convexity_gap = std::max(check.worst_convexity_gap, cgap);
    if (cgap > 1e-12 * std::max(1.0, std::abs(fx) + std::abs(fy))) {
      check.convex_ok = false;
    }
  }
  return check;
}

}  // namespace fedbco
