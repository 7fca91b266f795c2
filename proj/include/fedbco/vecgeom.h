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

#ifndef FEDBCO_VECGEOM_H_
#define FEDBCO_VECGEOM_H_

#include <cstddef>
#include <span>
#include <vector>

#include "fedbco/rng.h"

namespace fedbco {

// Dense real vector in R^d. Model iterates, gradients and linear
// coefficients all use this representation.
using Vec = std::vector<double>;
using VecView = std::span<const double>;

double Dot(VecView a, VecView b);
double SquaredNorm(VecView x);
double Norm(VecView x);
double Distance(VecView a, VecView b);

// y += alpha * x
void Axpy(double alpha, VecView x, std::span<double> y);
Vec Scaled(VecView x, double alpha);
Vec Add(VecView a, VecView b);
Vec Sub(VecView a, VecView b);
// Arithmetic mean of equally sized vectors. `vs` must be non-empty.
Vec Mean(std::span<const Vec> vs);

bool AllFinite(VecView x);

// Throws std::invalid_argument when sizes differ.
void CheckSameDim(VecView a, VecView b, const char* what);

// Euclidean projection onto the centered L2 ball of radius `radius`.
// Points already within radius * (1 + d * eps) are returned unchanged, which
// makes the map idempotent after one rounding.
Vec ProjectL2Ball(VecView x, double radius);

// Uniform draw from the unit sphere S^{d-1} (normalized Gaussian).
Vec SampleUnitSphere(RngStream& rng, std::size_t dim);

// Potential d(x, y) = |x|^2/2 - |y_hat|^2/2 - <y, x - y_hat> with
// y_hat = ProjectL2Ball(y, radius). Requires |x_star| <= radius.
double LazyPotential(VecView x_star, VecView y, double radius);

}  // namespace fedbco

#endif  // FEDBCO_VECGEOM_H_
