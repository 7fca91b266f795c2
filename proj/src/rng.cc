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
#include <numbers>

namespace fedbco {
namespace {

constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ULL;

std::uint64_t DeriveKey(std::uint64_t seed, std::uint64_t stream_id) {
  return Mix64(Mix64(seed ^ 0xD1B54A32D192ED03ULL) ^
               Mix64(stream_id + kGolden));
}

}  // namespace

std::uint64_t Mix64(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

std::uint64_t StreamTag(std::string_view purpose) {
  std::uint64_t h = 0xCBF29CE484222325ULL;
  for (unsigned char c : purpose) {
    h ^= c;
    h *= 0x100000001B3ULL;
  }
  return h;
}

RngStream::RngStream(std::uint64_t seed, std::uint64_t stream_id)
    : RngStream(seed, stream_id, DeriveKey(seed, stream_id)) {}

RngStream::RngStream(std::uint64_t seed, std::uint64_t stream_id,
                     std::uint64_t key)
    : seed_(seed), stream_id_(stream_id), key_(key) {}

std::uint64_t RngStream::NextU64() {
  ++counter_;
  return Mix64(key_ + counter_ * kGolden);
}

double RngStream::Uniform() {
  return static_cast<double>(NextU64() >> 11) * 0x1.0p-53;
}

double RngStream::UniformOpenZero() {
  return (static_cast<double>(NextU64() >> 11) + 1.0) * 0x1.0p-53;
}

double RngStream::Normal() {
  if (has_spare_) {
    has_spare_ = false;
    return spare_;
  }
  const double radius = std::sqrt(-2.0 * std::log(UniformOpenZero()));
  const double angle = 2.0 * std::numbers::pi * Uniform();
  spare_ = radius * std::sin(angle);
  has_spare_ = true;
  return radius * std::cos(angle);
}

RngStream RngStream::Substream(std::uint64_t tag) const {
  return RngStream(seed_, stream_id_, Mix64(key_ ^ Mix64(tag + kGolden)));
}

}  // namespace fedbco
