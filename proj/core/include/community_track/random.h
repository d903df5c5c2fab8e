// Copyright 2026 The community_track Authors.
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

#ifndef COMMUNITY_TRACK_RANDOM_H_
#define COMMUNITY_TRACK_RANDOM_H_

#include <cmath>
#include <cstdint>
#include <random>
#include <span>
#include <utility>

namespace community_track {

// Independent named streams derived from one user seed, so that e.g. the
// fixed-node draws do not shift when the free-node rate changes.
enum class RandomStream : uint64_t {
  kFreeNodes = 1,
  kFixedNodes = 2,
  kPreferentialNodes = 3,
  kVisitOrder = 4,
  kSynthetic = 5,
};

inline uint64_t SplitMix64(uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// std::mt19937_64's output sequence is fixed by the standard; the helpers
// below avoid the library distributions, whose outputs are not.
class Rng {
 public:
  explicit Rng(uint64_t seed) : engine_(seed) {}
  Rng(uint64_t seed, RandomStream stream)
      : engine_(SplitMix64(seed ^ SplitMix64(static_cast<uint64_t>(stream)))) {}

  uint64_t Next() { return engine_(); }

  // Uniform in [0, 1).
  double Uniform() { return static_cast<double>(Next() >> 11) * 0x1.0p-53; }

  bool Bernoulli(double p) { return Uniform() < p; }

  // Uniform in [0, bound). Lemire's rejection keeps it unbiased.
  uint64_t Below(uint64_t bound) {
    if (bound <= 1) return 0;
    const uint64_t threshold = -bound % bound;
    for (;;) {
      const uint64_t x = Next();
      const unsigned __int128 product =
          static_cast<unsigned __int128>(x) * bound;
      if (static_cast<uint64_t>(product) >= threshold) {
        return static_cast<uint64_t>(product >> 64);
      }
    }
  }

  // Number of failures before the first success of a Bernoulli(p) sequence.
  // Requires 0 < p < 1.
  uint64_t GeometricSkip(double p) {
    const double u = 1.0 - Uniform();  // (0, 1]
    const double skip = std::floor(std::log(u) / std::log1p(-p));
    return skip >= 1.8e19 ? UINT64_MAX : static_cast<uint64_t>(skip);
  }

  template <typename T>
  void Shuffle(std::span<T> items) {
    for (size_t i = items.size(); i > 1; --i) {
      std::swap(items[i - 1], items[Below(i)]);
    }
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace community_track

#endif  // COMMUNITY_TRACK_RANDOM_H_
