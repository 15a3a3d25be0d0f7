// Copyright 2026 The coexline Authors
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

#ifndef COEXLINE_RNG_HPP
#define COEXLINE_RNG_HPP

#include <cmath>
#include <cstdint>
#include <random>

namespace coexline {

/// Seed-splitting function for replica streams.
///
/// Bit-exact definition (other implementations must reproduce it to share
/// streams): with z = master + 0x9E3779B97F4A7C15 * (index + 1) (mod 2^64),
///   z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9
///   z = (z ^ (z >> 27)) * 0x94D049BB133111EB
///   return z ^ (z >> 31)
/// i.e. the SplitMix64 finalizer applied to the (index + 1)-th Weyl step.
constexpr std::uint64_t mix64(std::uint64_t master, std::uint64_t index) noexcept {
  std::uint64_t z = master + 0x9E3779B97F4A7C15ULL * (index + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

/// One independent random stream. The engine is std::mt19937_64, whose output
/// sequence is fixed by the standard; conversions to doubles and coins are
/// done here rather than through <random> distributions, so draws are
/// identical across standard library implementations.
class Stream {
 public:
  using engine_type = std::mt19937_64;

  explicit Stream(std::uint64_t seed) : engine_(seed) {}

  static Stream for_replica(std::uint64_t master_seed, std::uint64_t replica) {
    return Stream(mix64(master_seed, replica));
  }

  std::uint64_t next_u64() { return engine_(); }

  /// Uniform on [0, 1) with 53 random bits.
  double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

  /// Fair coin; bits are taken 64 at a time from one engine output.
  int coin() {
    if (bits_left_ == 0) {
      bits_ = engine_();
      bits_left_ = 64;
    }
    const int bit = static_cast<int>(bits_ & 1U);
    bits_ >>= 1;
    --bits_left_;
    return bit;
  }

  /// Exponential with the given rate (rate > 0).
  double exponential(double rate) { return -std::log1p(-uniform()) / rate; }

 private:
  engine_type engine_;
  std::uint64_t bits_ = 0;
  int bits_left_ = 0;
};

}  // namespace coexline

#endif  // COEXLINE_RNG_HPP
