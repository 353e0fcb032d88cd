// Copyright 2026 The koin Authors
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

#ifndef KOIN_RNG_HPP_
#define KOIN_RNG_HPP_

#include <bit>
#include <cstdint>
#include <utility>
#include <vector>

namespace koin {

// SplitMix64. Pinned so that identical seeds give identical streams on
// every platform and in the reference tooling.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    state_ += 0x9E3779B97F4A7C15ULL;
    std::uint64_t z = state_;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  // Uniform in [0, 1) with 53 bits of precision.
  double next_double() {
    return static_cast<double>(next() >> 11) * 0x1.0p-53;
  }

  // Uniform in [0, n). Bitmask rejection keeps the draw unbiased and the
  // stream consumption data-independent of the accept path.
  std::uint64_t bound(std::uint64_t n) {
    if (n <= 1) return 0;
    const int bits = std::bit_width(n - 1);
    for (;;) {
      const std::uint64_t r = next() >> (64 - bits);
      if (r < n) return r;
    }
  }

  // Bernoulli draw. Degenerate probabilities consume no stream values so
  // that p=0 and p=1 paths stay replayable without counting draws.
  bool chance(double p) {
    if (p <= 0.0) return false;
    if (p >= 1.0) return true;
    return next_double() < p;
  }

  // Fisher-Yates, high index to low. Each step draws bound(i + 1).
  template <typename T>
  void shuffle(std::vector<T>& items) {
    if (items.size() < 2) return;
    for (std::size_t i = items.size() - 1; i >= 1; --i) {
      const std::size_t j = static_cast<std::size_t>(bound(i + 1));
      using std::swap;
      swap(items[i], items[j]);
      if (i == 1) break;
    }
  }

 private:
  std::uint64_t state_;
};

// One-step key derivation: first output of SplitMix64 seeded with
// base XOR salt. Used to fan a run seed out to independent per-record
// and per-trial streams.
inline std::uint64_t derive_seed(std::uint64_t base, std::uint64_t salt) {
  return Rng(base ^ salt).next();
}

}  // namespace koin

#endif  // KOIN_RNG_HPP_
