// Copyright 2026 The ergodic-games Authors
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

#ifndef ERGODIC_RANDOM_H_
#define ERGODIC_RANDOM_H_

#include <cstdint>
#include <limits>

namespace ergodic {

// SplitMix64. Small, fast and splittable: Stream(seed, k) derives an
// independent generator for task k, so results do not depend on how tasks
// are scheduled across threads.
class SplitMix64 {
 public:
  using result_type = std::uint64_t;

  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  static SplitMix64 Stream(std::uint64_t master_seed, std::uint64_t index) {
    SplitMix64 mixer(master_seed ^ Mix(index + 0x632be59bd9b4e019ULL));
    return SplitMix64(mixer());
  }

  static constexpr result_type min() { return 0; }
  static constexpr result_type max() {
    return std::numeric_limits<result_type>::max();
  }

  result_type operator()() {
    state_ += 0x9e3779b97f4a7c15ULL;
    return Mix(state_);
  }

  // Uniform on [0, 1) with 53 random bits.
  double Uniform01() { return static_cast<double>((*this)() >> 11) * 0x1.0p-53; }
  double Uniform(double lo, double hi) { return lo + (hi - lo) * Uniform01(); }
  // Uniform on {0, ..., bound - 1}; bound must be positive.
  std::uint64_t Below(std::uint64_t bound) {
    return static_cast<std::uint64_t>(Uniform01() * static_cast<double>(bound));
  }

 private:
  static std::uint64_t Mix(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  std::uint64_t state_;
};

}  // namespace ergodic

#endif  // ERGODIC_RANDOM_H_
