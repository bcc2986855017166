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

#ifndef ERGODIC_GAME_H_
#define ERGODIC_GAME_H_

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "ergodic/state_set.h"

namespace ergodic {

enum class Player { kMax, kMin };

inline Player Opponent(Player p) {
  return p == Player::kMax ? Player::kMin : Player::kMax;
}
inline const char* PlayerName(Player p) {
  return p == Player::kMax ? "MAX" : "MIN";
}

// Row-sum tolerance for probability vectors.
inline constexpr double kRowSumTol = 1e-9;
// Entries at or below this are not part of a transition support.
inline constexpr double kSupportTol = 1e-12;

// Unchecked game tables, as read from a file or assembled by a builder.
// payoff[i][a][b] is the stage payoff paid by MIN to MAX; trans[i][a][b] is a
// probability vector of length n over next states.
struct GameData {
  std::size_t n = 0;
  std::vector<std::vector<std::string>> actions_max;
  std::vector<std::vector<std::string>> actions_min;
  std::vector<std::vector<std::vector<double>>> payoff;
  std::vector<std::vector<std::vector<std::vector<double>>>> trans;

  friend bool operator==(const GameData&, const GameData&) = default;
};

struct ValidationIssue {
  std::string location;
  std::string message;
};

struct ValidationReport {
  std::vector<ValidationIssue> issues;
  bool ok() const { return issues.empty(); }
  std::string Summary(std::size_t max_issues = 5) const;
};

ValidationReport Validate(const GameData& data);

// A validated finite zero-sum stochastic game. Immutable; all accessors take
// 0-based indices.
class FiniteGame {
 public:
  // Throws ValidationError when Validate(data) reports issues.
  static FiniteGame Create(GameData data);

  std::size_t num_states() const { return data_.n; }
  std::size_t num_actions(Player p, std::size_t i) const {
    return p == Player::kMax ? data_.actions_max[i].size()
                             : data_.actions_min[i].size();
  }
  double payoff(std::size_t i, std::size_t a, std::size_t b) const {
    return data_.payoff[i][a][b];
  }
  std::span<const double> transition(std::size_t i, std::size_t a,
                                     std::size_t b) const {
    return data_.trans[i][a][b];
  }
  // States j with trans[i][a][b][j] > kSupportTol, ascending.
  const std::vector<std::size_t>& support_indices(std::size_t i, std::size_t a,
                                                  std::size_t b) const {
    return supports_[i][a][b];
  }

  const GameData& data() const { return data_; }

  friend bool operator==(const FiniteGame& x, const FiniteGame& y) {
    return x.data_ == y.data_;
  }

 private:
  explicit FiniteGame(GameData data);

  GameData data_;
  std::vector<std::vector<std::vector<std::vector<std::size_t>>>> supports_;
};

ValidationReport Validate(const FiniteGame& game);

// {j : p(j | i,a,b) > kSupportTol}. Throws IndexError on bad indices.
StateSet Support(const FiniteGame& game, std::size_t i, std::size_t a,
                 std::size_t b);

// Adds g[i] to every payoff of state i. Throws DimensionError when
// g.size() != n.
FiniteGame Perturb(const FiniteGame& game, std::span<const double> g);

}  // namespace ergodic

#endif  // ERGODIC_GAME_H_
