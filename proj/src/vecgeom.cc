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

#include "fedbco/vecgeom.h"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace fedbco {

double Dot(VecView a, VecView b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

double SquaredNorm(VecView x) { return Dot(x, x); }

double Norm(VecView x) { return std::sqrt(SquaredNorm(x)); }

double Distance(VecView a, VecView b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const double diff = a[i] - b[i];
    s += diff * diff;
  }
  return std::sqrt(s);
}

void Axpy(double alpha, VecView x, std::span<double> y) {
  for (std::size_t i = 0; i < x.size(); ++i) y[i] += alpha * x[i];
}

Vec Scaled(VecView x, double alpha) {
  Vec out(x.begin(), x.end());
  for (double& v : out) v *= alpha;
  return out;
}

Vec Add(VecView a, VecView b) {
  Vec out(a.begin(), a.end());
  Axpy(1.0, b, out);
  return out;
}

Vec Sub(VecView a, VecView b) {
  Vec out(a.begin(), a.end());
  Axpy(-1.0, b, out);
  return out;
}

Vec Mean(std::span<const Vec> vs) {
  Vec out(vs.front().size(), 0.0);
  for (const Vec& v : vs) Axpy(1.0, v, out);
  const double inv = 1.0 / static_cast<double>(vs.size());
  for (double& v : out) v *= inv;
  return out;
}

bool AllFinite(VecView x) {
  for (double v : x) {
    if (!std::isfinite(v)) return false;
  }
  return true;
}

void CheckSameDim(VecView a, VecView b, const char* what) {
  if (a.size() != b.size()) {
    throw std::invalid_argument(std::string(what) + ": dimension mismatch (" +
                                std::to_string(a.size()) + " vs " +
                                std::to_string(b.size()) + ")");
  }
}

Vec ProjectL2Ball(VecView x, double radius) {
  if (!(radius > 0.0) || !std::isfinite(radius)) {
    throw std::invalid_argument("ProjectL2Ball: radius must be positive");
  }
  if (!AllFinite(x)) {
    throw std::invalid_argument("ProjectL2Ball: non-finite input");
  }
  const double norm = Norm(x);
  const double slack = 1.0 + static_cast<double>(x.size()) *
                                 std::numeric_limits<double>::epsilon();
  if (norm <= radius * slack) return Vec(x.begin(), x.end());
  return Scaled(x, radius / norm);
}

Vec SampleUnitSphere(RngStream& rng, std::size_t dim) {
  if (dim == 0) {
    throw std::invalid_argument("SampleUnitSphere: dimension must be >= 1");
  }
  Vec u(dim);
  for (;;) {
    for (double& v : u) v = rng.Normal();
    const double norm = Norm(u);
    // Zero norm has probability zero; redraw if it happens anyway.
    if (norm > 0.0 && std::isfinite(norm)) {
      for (double& v : u) v /= norm;
      return u;
    }
  }
}

double LazyPotential(VecView x_star, VecView y, double radius) {
  CheckSameDim(x_star, y, "LazyPotential");
  const double slack = 1.0 + static_cast<double>(x_star.size()) *
                                 std::numeric_limits<double>::epsilon();
  if (Norm(x_star) > radius * slack) {
    throw std::invalid_argument("LazyPotential: |x_star| exceeds radius");
  }
  const Vec y_hat = ProjectL2Ball(y, radius);
  double inner = 0.0;
  for (std::size_t i = 0; i < y.size(); ++i) {
    inner += y[i] * (x_star[i] - y_hat[i]);
  }
  return 0.5 * SquaredNorm(x_star) - 0.5 * SquaredNorm(y_hat) - inner;
}

}  // namespace fedbco
