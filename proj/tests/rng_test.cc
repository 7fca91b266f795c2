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

#include "fedbco/rng.h"

#include <cmath>
#include <concepts>
#include <random>
#include <vector>

#include "doctest.h"

namespace fedbco {
namespace {

static_assert(std::uniform_random_bit_generator<RngStream>);

TEST_CASE("identical seed and stream replay the first 10^4 draws") {
  RngStream a(42, 7);
  RngStream b(42, 7);
  for (int i = 0; i < 10000; ++i) REQUIRE(a.NextU64() == b.NextU64());
  CHECK(a == b);
}

TEST_CASE("distinct streams and seeds diverge") {
  RngStream a(42, 7);
  RngStream b(42, 8);
  RngStream c(43, 7);
  int same_ab = 0;
  int same_ac = 0;
  for (int i = 0; i < 1000; ++i) {
    const auto x = a.NextU64();
    same_ab += x == b.NextU64();
    same_ac += x == c.NextU64();
  }
  CHECK(same_ab == 0);
  CHECK(same_ac == 0);
}

TEST_CASE("substream does not advance the parent") {
  RngStream a(1, 2);
  RngStream copy = a;
  RngStream sub = a.Substream(StreamTag("purpose"));
  CHECK(a == copy);
  CHECK(sub.NextU64() != a.NextU64());
  // Same tag, same substream.
  RngStream s1 = copy.Substream(99);
  RngStream s2 = copy.Substream(99);
  CHECK(s1.NextU64() == s2.NextU64());
}

TEST_CASE("uniform draws stay in range") {
  RngStream r(5, 0);
  for (int i = 0; i < 100000; ++i) {
    const double u = r.Uniform();
    REQUIRE(u >= 0.0);
    REQUIRE(u < 1.0);
    const double v = r.UniformOpenZero();
    REQUIRE(v > 0.0);
    REQUIRE(v <= 1.0);
  }
}

TEST_CASE("normal draws have unit variance") {
  RngStream r(11, 3);
  const int n = 200000;
  double sum = 0.0;
  double sq = 0.0;
  for (int i = 0; i < n; ++i) {
    const double z = r.Normal();
    sum += z;
    sq += z * z;
  }
  CHECK(std::abs(sum / n) < 4.0 / std::sqrt(n));
  CHECK(std::abs(sq / n - 1.0) < 0.02);
}

TEST_CASE("works with standard distributions") {
  RngStream r(3, 3);
  std::uniform_int_distribution<int> dist(0, 9);
  std::vector<int> counts(10, 0);
  for (int i = 0; i < 10000; ++i) ++counts[dist(r)];
  for (int c : counts) CHECK(c > 800);
}

}  // namespace
}  // namespace fedbco
