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

#ifndef FEDBCO_ORACLES_H_
#define FEDBCO_ORACLES_H_

#include <cstddef>
#include <functional>
#include <limits>
#include <string>
#include <variant>

#include "fedbco/rng.h"
#include "fedbco/vecgeom.h"

namespace fedbco {

// f(x) = <beta, x>.
struct LinearCost {
  Vec beta;
};

// (H/2)|x-c|^2 inside radius G/H, G|x-c| - G^2/(2H) outside. Convex,
// H-smooth and G-Lipschitz on all of R^d.
struct HuberCost {
  Vec center;
};

// User-supplied closure. Class membership is the caller's claim; see
// SpotCheckClass.
struct CustomCost {
  std::function<double(VecView)> value;
  std::function<Vec(VecView)> gradient;
};

// One cost function f_t^m. Immutable after construction and safe to share
// across threads.
class CostFunction {
 public:
  using Kind = std::variant<LinearCost, HuberCost, CustomCost>;

  // Requires |beta| <= lipschitz_g (up to 1e-12 relative rounding).
  static CostFunction Linear(Vec beta, double lipschitz_g);
  static CostFunction HuberQuadratic(Vec center, double smooth_h,
                                     double lipschitz_g);
  static CostFunction Custom(
      std::size_t dim, std::function<double(VecView)> value,
      std::function<Vec(VecView)> gradient, double lipschitz_g,
      double smooth_h = std::numeric_limits<double>::infinity());

  std::size_t dim() const { return dim_; }
  double lipschitz_g() const { return lipschitz_g_; }
  // +inf when no smoothness is claimed.
  double smooth_h() const { return smooth_h_; }
  const Kind& kind() const { return kind_; }
  bool is_linear() const { return std::holds_alternative<LinearCost>(kind_); }
  // Only valid when is_linear().
  const Vec& beta() const { return std::get<LinearCost>(kind_).beta; }

  double Value(VecView x) const;
  Vec Gradient(VecView x) const;

 private:
  CostFunction(Kind kind, std::size_t dim, double lipschitz_g,
               double smooth_h);

  Kind kind_;
  std::size_t dim_;
  double lipschitz_g_;
  double smooth_h_;
};

// Exact function value. Throws std::invalid_argument on dimension mismatch.
double Eval(const CostFunction& f, VecView x);
// Exact gradient. Throws std::invalid_argument on dimension mismatch.
Vec Grad(const CostFunction& f, VecView x);
// grad(f, x) + z with z ~ N(0, (sigma^2 / d) I), so E|z|^2 = sigma^2.
Vec NoisyGrad(const CostFunction& f, VecView x, double sigma,
              RngStream& rng);

// What a machine learns from one oracle call. The recorded points are the
// points whose losses enter the regret ledger.
struct GradientReply {
  Vec point;
  double value;
  Vec gradient;
};
struct OneValueReply {
  Vec at;
  double value;
};
struct TwoValuesReply {
  Vec at1;
  double value1;
  Vec at2;
  double value2;
};
using OracleReply = std::variant<GradientReply, OneValueReply, TwoValuesReply>;

// Number of loss entries a reply contributes (1 or 2).
int QueryCount(const OracleReply& reply);

// Result of probing a CostFunction for its declared class on random pairs
// drawn from the ball of radius `radius`.
struct ClassCheck {
  bool lipschitz_ok = true;
  bool smooth_ok = true;
  bool convex_ok = true;
  double worst_lipschitz_ratio = 0.0;  // |f(x)-f(y)| / (G |x-y|)
  double worst_smooth_ratio = 0.0;     // |g(x)-g(y)| / (H |x-y|)
  double worst_convexity_gap = 0.0;    // f(mid) - (f(x)+f(y))/2
  bool ok() const { return lipschitz_ok && smooth_ok && convex_ok; }
};

ClassCheck SpotCheckClass(const CostFunction& f, double radius, int pairs,
                          RngStream& rng);

// Uniform draw from the ball of the given radius.
Vec SampleBall(RngStream& rng, std::size_t dim, double radius);

}  // namespace fedbco

#endif  // FEDBCO_ORACLES_H_
