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

#include "ergodic/dominion.h"

#include <algorithm>
#include <cmath>

#include "ergodic/errors.h"
#include "ergodic/matrix_game.h"
#include "ergodic/shapley.h"

namespace ergodic {
namespace {

// Does `player` have, at state i, a pure action whose every opponent
// response keeps the support inside `d`?
bool HasSafeAction(const FiniteGame& game, Player player, std::size_t i,
                   const StateSet& d) {
  const std::size_t own = game.num_actions(player, i);
  const std::size_t opp = game.num_actions(Opponent(player), i);
  for (std::size_t u = 0; u < own; ++u) {
    bool safe = true;
    for (std::size_t v = 0; v < opp && safe; ++v) {
      const std::size_t a = player == Player::kMax ? u : v;
      const std::size_t b = player == Player::kMax ? v : u;
      for (std::size_t j : game.support_indices(i, a, b)) {
        if (!d.contains(j)) {
          safe = false;
          break;
        }
      }
    }
    if (safe) return true;
  }
  return false;
}

void CheckCap(const FiniteGame& game, std::size_t enum_cap) {
  if (game.num_states() > enum_cap || game.num_states() > 62) {
    throw TooLarge("dominion enumeration visits all 2^n subsets; n = " +
                   std::to_string(game.num_states()) +
                   " exceeds the enumeration cap " + std::to_string(enum_cap));
  }
}

}  // namespace

bool IsDominion(const FiniteGame& game, Player player, const StateSet& d) {
  if (d.empty()) throw EmptySet("a dominion must be nonempty");
  for (std::size_t i : d.indices()) {
    if (!HasSafeAction(game, player, i, d)) return false;
  }
  return true;
}

StateSet LargestDominionWithin(const FiniteGame& game, Player player,
                               const StateSet& s) {
  StateSet cur = s;
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i : cur.indices()) {
      if (!HasSafeAction(game, player, i, cur)) {
        cur.erase(i);
        changed = true;
      }
    }
  }
  return cur;
}

void ForEachSubsetByCardinality(std::size_t n,
                                const std::function<void(std::uint64_t)>& fn) {
  std::vector<std::size_t> idx;
  for (std::size_t c = 1; c <= n; ++c) {
    idx.resize(c);
    for (std::size_t k = 0; k < c; ++k) idx[k] = k;
    while (true) {
      std::uint64_t mask = 0;
      for (std::size_t k : idx) mask |= std::uint64_t{1} << k;
      fn(mask);
      // Next combination in lexicographic order.
      std::size_t k = c;
      while (k > 0 && idx[k - 1] == n - c + (k - 1)) --k;
      if (k == 0) break;
      ++idx[k - 1];
      for (std::size_t t = k; t < c; ++t) idx[t] = idx[t - 1] + 1;
    }
  }
}

DominionReport EnumerateDominions(const FiniteGame& game, Player player,
                                  std::size_t enum_cap) {
  CheckCap(game, enum_cap);
  DominionReport report;
  report.player = player;
  const std::size_t n = game.num_states();
  ForEachSubsetByCardinality(n, [&](std::uint64_t mask) {
    StateSet d = StateSet::FromMask(n, mask);
    if (IsDominion(game, player, d)) report.dominions.push_back(std::move(d));
  });
  return report;
}

ErgodicityVerdict DisjointDominions(const FiniteGame& game,
                                    std::size_t enum_cap, Player first) {
  CheckCap(game, enum_cap);
  const std::size_t n = game.num_states();
  const Player second = Opponent(first);
  ErgodicityVerdict verdict;
  verdict.method = VerdictMethod::kCombinatorial;
  verdict.ergodic = true;
  ForEachSubsetByCardinality(n, [&](std::uint64_t mask) {
    if (verdict.witness) return;
    StateSet d = StateSet::FromMask(n, mask);
    // The largest dominion of `first` inside d is d itself iff d is one.
    if (!IsDominion(game, first, d)) return;
    StateSet other = LargestDominionWithin(game, second, d.complement());
    if (other.empty()) return;
    verdict.ergodic = false;
    if (first == Player::kMax) {
      verdict.witness.emplace(std::move(d), std::move(other));
    } else {
      verdict.witness.emplace(std::move(other), std::move(d));
    }
  });
  return verdict;
}

SliceLimitTrace TraceSliceLimit(const FiniteGame& game, const StateSet& d,
                                Player player) {
  if (d.empty()) throw EmptySet("slice limit test needs a nonempty set");
  const std::size_t n = game.num_states();
  const double sign = player == Player::kMax ? -1.0 : 1.0;
  const std::vector<std::size_t> members = d.indices();
  SliceLimitTrace trace;
  std::vector<double> x(n);
  for (double magnitude : kSliceKappas) {
    for (std::size_t j = 0; j < n; ++j) {
      x[j] = d.contains(j) ? 0.0 : sign * magnitude;
    }
    std::vector<double> row;
    row.reserve(members.size());
    for (std::size_t i : members) {
      row.push_back(Solve(StateMatrix(game, i, x)).value);
    }
    trace.values.push_back(std::move(row));
  }
  const auto& last = trace.values.back();
  const auto& prev = trace.values[trace.values.size() - 2];
  for (std::size_t k = 0; k < members.size(); ++k) {
    trace.last_change = std::max(trace.last_change, std::abs(last[k] - prev[k]));
  }
  const double step = kSliceKappas.back() - kSliceKappas[kSliceKappas.size() - 2];
  trace.bounded = trace.last_change <= kPlateauTol + kSlopeTol * step;
  return trace;
}

bool SliceLimitTest(const FiniteGame& game, const StateSet& d, Player player) {
  return TraceSliceLimit(game, d, player).bounded;
}

}  // namespace ergodic
