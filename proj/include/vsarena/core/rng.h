// Copyright 2026 The VS-Arena Authors.
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

#ifndef VSARENA_CORE_RNG_H_
#define VSARENA_CORE_RNG_H_

#include <array>
#include <cstdint>
#include <span>
#include <vector>

namespace vsarena {

// Platform-independent PRNG (xoshiro256**, seeded through SplitMix64).
// Standard-library distributions are implementation-defined, so every
// sampling routine used by the environments lives here.
class Rng {
 public:
  explicit Rng(uint64_t seed = 0, uint64_t stream = 0);

  uint64_t Next();

  // Uniform integer in [0, n). n must be positive.
  uint64_t Uniform(uint64_t n);
  // Uniform integer in [lo, hi].
  int64_t UniformInt(int64_t lo, int64_t hi);
  // Uniform real in [0, 1) with 53 bits of precision.
  double UniformReal();
  bool Bernoulli(double p);

  // Samples an index according to non-negative weights.
  int Categorical(std::span<const double> weights);

  // Independent generator for a named subsystem (deal, respawn, sticky...).
  Rng Split(uint64_t stream) const;

  template <typename T>
  void Shuffle(std::vector<T>& items) {
    for (size_t i = items.size(); i > 1; --i) {
      size_t j = static_cast<size_t>(Uniform(i));
      std::swap(items[i - 1], items[j]);
    }
  }

  bool operator==(const Rng& other) const = default;

 private:
  std::array<uint64_t, 4> s_{};
};

// Stable stream identifiers so replays stay valid as subsystems are added.
namespace rng_stream {
inline constexpr uint64_t kDeal = 0x6465616c;
inline constexpr uint64_t kRespawn = 0x72657370;
inline constexpr uint64_t kSticky = 0x7374636b;
inline constexpr uint64_t kServe = 0x73727665;
inline constexpr uint64_t kNoop = 0x6e6f6f70;
inline constexpr uint64_t kPolicy = 0x706f6c69;
}  // namespace rng_stream

uint64_t SplitMix64(uint64_t& state);
uint64_t MixSeed(uint64_t seed, uint64_t salt);

}  // namespace vsarena

#endif  // VSARENA_CORE_RNG_H_
