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

#ifndef ERGODIC_DOMINION_H_
#define ERGODIC_DOMINION_H_

#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include "ergodic/game.h"
#include "ergodic/state_set.h"

namespace ergodic {

inline constexpr std::size_t kDefaultEnumCap = 16;

// True iff every i in D has a pure action of `player` such that, whatever the
// opponent plays, the transition support stays inside D. Throws EmptySet
// when D is empty.
bool IsDominion(const FiniteGame& game, Player player, const StateSet& d);

// Greatest fixed point of the deletion loop: drop states of S that lack an
// action keeping every support inside the current set, until stable. The
// result is the union of all dominions of `player` contained in S, or the
// empty set when there are none.
StateSet LargestDominionWithin(const FiniteGame& game, Player player,
                               const StateSet& s);

// Calls fn(mask) for every nonempty subset of [n], by increasing cardinality
// and lexicographically within a cardinality. Requires n <= 62.
void ForEachSubsetByCardinality(std::size_t n,
                                const std::function<void(std::uint64_t)>& fn);

struct DominionReport {
  Player player = Player::kMax;
  // Every dominion of `player`, ordered as in ForEachSubsetByCardinality.
  std::vector<StateSet> dominions;
};

// Throws TooLarge when n > enum_cap.
DominionReport EnumerateDominions(const FiniteGame& game, Player player,
                                  std::size_t enum_cap = kDefaultEnumCap);

enum class VerdictMethod { kCombinatorial, kSliceProbe };

struct ErgodicityVerdict {
  bool ergodic = true;
  // (MAX dominion, MIN dominion), disjoint; present iff not ergodic.
  std::optional<std::pair<StateSet, StateSet>> witness;
  VerdictMethod method = VerdictMethod::kCombinatorial;
};

// Searches dominions of `first` by increasing cardinality and, for each,
// the largest dominion of the other player in its complement. The first
// nonempty hit is returned as a witness of non-ergodicity. Throws TooLarge
// when n > enum_cap.
ErgodicityVerdict DisjointDominions(const FiniteGame& game,
                                    std::size_t enum_cap = kDefaultEnumCap,
                                    Player first = Player::kMin);

// Schedule of |kappa| values for SliceLimitTest.
inline constexpr std::array<double, 4> kSliceKappas = {1e1, 1e2, 1e3, 1e4};
// Bounded iff each D-coordinate moved by at most
// kPlateauTol + kSlopeTol * |kappa_last - kappa_prev| on the last step.
inline constexpr double kPlateauTol = 1e-6;
inline constexpr double kSlopeTol = 1e-4;

struct SliceLimitTrace {
  // values[s][k]: T_i(kappa_s e_{[n]\D}) for the k-th member i of D.
  std::vector<std::vector<double>> values;
  double last_change = 0.0;  // max_i |T_i(kappa_last) - T_i(kappa_prev)|
  bool bounded = true;
};

// Evaluates T_i(kappa e_{[n]\D}), i in D, with kappa -> -inf for MAX and
// kappa -> +inf for MIN, and reports whether the D-coordinates stay bounded.
SliceLimitTrace TraceSliceLimit(const FiniteGame& game, const StateSet& d,
                                 Player player);
bool SliceLimitTest(const FiniteGame& game, const StateSet& d, Player player);

}  // namespace ergodic

#endif  // ERGODIC_DOMINION_H_
