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

#ifndef FEDBCO_RNG_H_
#define FEDBCO_RNG_H_

#include <cstdint>
#include <limits>
#include <string_view>

namespace fedbco {

// Counter-based random stream. The i-th 64-bit draw is a pure function of
// (key, i), where the key is derived from (seed, stream_id). Substreams are
// derived by hashing a tag into the key, so every (machine, round, purpose)
// triple can own an independent stream without shared mutable state.
//
// Satisfies std::uniform_random_bit_generator.
class RngStream {
 public:
  using result_type = std::uint64_t;

  RngStream() : RngStream(0, 0) {}
  RngStream(std::uint64_t seed, std::uint64_t stream_id);

  static constexpr result_type min() { return 0; }
  static constexpr result_type max() {
    return std::numeric_limits<result_type>::max();
  }

  result_type operator()() { return NextU64(); }

  std::uint64_t NextU64();
  // Uniform on [0, 1) with 53 bits of resolution.
  double Uniform();
  // Uniform on (0, 1]; never returns zero.
  double UniformOpenZero();
  // Standard normal via Box-Muller; the second variate is cached.
  double Normal();

  // Independent stream keyed by this stream's key and `tag`. Does not
  // advance this stream.
  RngStream Substream(std::uint64_t tag) const;

  std::uint64_t seed() const { return seed_; }
  std::uint64_t stream_id() const { return stream_id_; }
  std::uint64_t counter() const { return counter_; }

  friend bool operator==(const RngStream& a, const RngStream& b) {
    return a.key_ == b.key_ && a.counter_ == b.counter_ &&
           a.has_spare_ == b.has_spare_ &&
           (!a.has_spare_ || a.spare_ == b.spare_);
  }

 private:
  RngStream(std::uint64_t seed, std::uint64_t stream_id, std::uint64_t key);

  std::uint64_t seed_;
  std::uint64_t stream_id_;
  std::uint64_t key_;
  std::uint64_t counter_ = 0;
  bool has_spare_ = false;
  double spare_ = 0.0;
};

// SplitMix64 finalizer.
std::uint64_t Mix64(std::uint64_t z);

// Stable 64-bit tag for a purpose name (FNV-1a), used to key substreams.
std::uint64_t StreamTag(std::string_view purpose);

}  // namespace fedbco

#endif  // FEDBCO_RNG_H_
