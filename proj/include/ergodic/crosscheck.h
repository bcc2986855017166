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

#ifndef ERGODIC_CROSSCHECK_H_
#define ERGODIC_CROSSCHECK_H_

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "ergodic/dominion.h"
#include "ergodic/game.h"
#include "ergodic/solver.h"

namespace ergodic {

// Non-ergodicity read off the operator: a pair of disjoint nonempty sets
// (I, J) where I passes SliceLimitTest for MAX and J for MIN.
ErgodicityVerdict SliceLimitVerdict(const FiniteGame& game,
                                    std::size_t enum_cap = kDefaultEnumCap);

struct CrosscheckOptions {
  std::size_t enum_cap = kDefaultEnumCap;
  int trials = 20;
  std::uint64_t seed = 0;
  SolveOptions solve;
};

// The three ergodicity verdicts side by side.
struct CrosscheckReport {
  ErgodicityVerdict combinatorial;
  ErgodicityVerdict slice;
  SolvabilityProbe probe;
  bool probe_ergodic = true;  // every drawn perturbation was solved

  bool slice_agrees() const { return slice.ergodic == combinatorial.ergodic; }
  // A non-ergodic game can still be solvable for the drawn perturbations, so
  // the probe only disagrees when it fails on an ergodic game.
  bool probe_consistent() const {
    return !combinatorial.ergodic || probe_ergodic;
  }
  bool probe_agrees() const { return probe_ergodic == combinatorial.ergodic; }
};

// Throws TooLarge when n > options.enum_cap.
CrosscheckReport ErgodicityCrosscheck(const FiniteGame& game,
                                      const CrosscheckOptions& options = {});

// Draws perturbations g = s (e_Dmax - e_Dmin) + noise with growing scale s
// along a non-ergodicity witness, and returns the first one for which the
// ergodic equation is not solved, if any within max_draws.
std::optional<std::vector<double>> FindUnsolvablePerturbation(
    const FiniteGame& game, const std::pair<StateSet, StateSet>& witness,
    int max_draws, std::uint64_t seed, const SolveOptions& options = {});

}  // namespace ergodic

#endif  // ERGODIC_CROSSCHECK_H_
