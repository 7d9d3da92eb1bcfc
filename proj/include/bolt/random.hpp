// Copyright 2026 The BOLT Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef BOLT_RANDOM_HPP
#define BOLT_RANDOM_HPP

#include <cstdint>
#include <random>

namespace bolt {

/// Seed of every randomized routine. Same seed and same parameters give the
/// same result.
struct RngSeed {
  std::uint64_t value = 0;

  friend bool operator==(RngSeed, RngSeed) = default;
};

/// SplitMix64 finalizer. Bijective on 64-bit words.
[[nodiscard]] constexpr std::uint64_t mix64(std::uint64_t x) noexcept {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

/// Counter-based child seed: a pure function of (parent, index), so any
/// stream can be reconstructed without replaying its siblings.
[[nodiscard]] constexpr RngSeed derive_seed(RngSeed parent,
                                            std::uint64_t index) noexcept {
  return RngSeed{mix64(parent.value ^ mix64(index + 0x632be59bd9b4e019ULL))};
}

/// Uniform double in [0, 1) built from the top 53 bits of a word.
[[nodiscard]] constexpr double unit_interval(std::uint64_t bits) noexcept {
  return static_cast<double>(bits >> 11) * 0x1.0p-53;
}

/// Uniform double in [0, 1) determined by a seed alone.
[[nodiscard]] constexpr double unit_from_seed(RngSeed seed) noexcept {
  return unit_interval(mix64(seed.value));
}

/// 64-bit Mersenne Twister seeded from an RngSeed.
[[nodiscard]] inline std::mt19937_64 make_engine(RngSeed seed) {
  return std::mt19937_64{seed.value};
}

/// Entropy-derived seed for callers that did not supply one.
[[nodiscard]] inline RngSeed entropy_seed() {
  std::random_device rd;
  return RngSeed{(static_cast<std::uint64_t>(rd()) << 32) ^ rd()};
}

}  // namespace bolt

#endif  // BOLT_RANDOM_HPP
