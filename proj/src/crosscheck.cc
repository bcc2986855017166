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

#include "ergodic/crosscheck.h"

#include <cmath>

#include "ergodic/errors.h"
#include "ergodic/random.h"

namespace ergodic {

ErgodicityVerdict SliceLimitVerdict(const FiniteGame& game,
                                    std::size_t enum_cap) {
  const std::size_t n = game.num_states();
  if (n > enum_cap || n > 62) {
    throw TooLarge("slice-limit enumeration visits all 2^n subsets; n = " +
                   std::to_string(n) + " exceeds the enumeration cap " +
                   std::to_string(enum_cap));
  }
  const std::uint64_t full = (std::uint64_t{1} << n) - 1;
  std::vector<char> max_ok(full + 1, 0), min_ok(full + 1, 0);
  for (std::uint64_t mask = 1; mask <= full; ++mask) {
    const StateSet d = StateSet::FromMask(n, mask);
    max_ok[mask] = SliceLimitTest(game, d, Player::kMax);
    min_ok[mask] = SliceLimitTest(game, d, Player::kMin);
  }
  // max_within[S]: some nonempty subset of S passes for MAX.
  std::vector<char> max_within(full + 1, 0);
  for (std::uint64_t mask = 1; mask <= full; ++mask) {
    max_within[mask] = max_ok[mask];
    for (std::size_t j = 0; j < n && !max_within[mask]; ++j) {
      const std::uint64_t bit = std::uint64_t{1} << j;
      if ((mask & bit) && max_within[mask & ~bit]) max_within[mask] = 1;
    }
  }

  // MIN sets by increasing cardinality, as in DisjointDominions.
  ErgodicityVerdict verdict;
  verdict.method = VerdictMethod::kSliceProbe;
  ForEachSubsetByCardinality(n, [&](std::uint64_t j_mask) {
    if (!verdict.ergodic || !min_ok[j_mask]) return;
    const std::uint64_t rest = full & ~j_mask;
    if (!max_within[rest]) return;
    ForEachSubsetByCardinality(n, [&](std::uint64_t i_mask) {
      if (!verdict.ergodic) return;
      if ((i_mask & ~rest) == 0 && max_ok[i_mask]) {
        verdict.ergodic = false;
        verdict.witness.emplace(StateSet::FromMask(n, i_mask),
                                StateSet::FromMask(n, j_mask));
      }
    });
  });
  return verdict;
}

CrosscheckReport ErgodicityCrosscheck(const FiniteGame& game,
                                      const CrosscheckOptions& options) {
  CrosscheckReport report;
  report.combinatorial = DisjointDominions(game, options.enum_cap);
  report.slice = SliceLimitVerdict(game, options.enum_cap);
  report.probe = ProbeSolvability(OperatorHandle::FromGame(game),
                                  options.trials, options.seed, options.solve);
  report.probe_ergodic = report.probe.failures.empty();
  return report;
}

std::optional<std::vector<double>> FindUnsolvablePerturbation(
    const FiniteGame& game, const std::pair<StateSet, StateSet>& witness,
    int max_draws, std::uint64_t seed, const SolveOptions& options) {
  const std::size_t n = game.num_states();
  const OperatorHandle t = OperatorHandle::FromGame(game);
  for (int k = 0; k < max_draws; ++k) {
    SplitMix64 rng = SplitMix64::Stream(seed, static_cast<std::uint64_t>(k));
    const double scale = std::pow(2.0, k / 5.0);
    std::vector<double> g(n);
    for (std::size_t i = 0; i < n; ++i) {
      g[i] = rng.Uniform(-1.0, 1.0);
      if (witness.first.contains(i)) g[i] += scale;
      if (witness.second.contains(i)) g[i] -= scale;
    }
    try {
      SolveErgodic(t.Perturbed(g), options);
    } catch (const NoConvergence&) {
      return g;
    }
  }
  return std::nullopt;
}

}  // namespace ergodic
