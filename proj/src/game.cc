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

#include "ergodic/game.h"

#include <cmath>
#include <cstdio>

#include "ergodic/errors.h"

namespace ergodic {
namespace {

std::string Loc(std::size_t i) { return "state " + std::to_string(i + 1); }

std::string Loc(std::size_t i, std::size_t a, std::size_t b) {
  return "(i,a,b)=(" + std::to_string(i + 1) + "," + std::to_string(a + 1) +
         "," + std::to_string(b + 1) + ")";
}

std::string Fmt(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

}  // namespace

std::string ValidationReport::Summary(std::size_t max_issues) const {
  if (ok()) return "ok";
  std::string out;
  for (std::size_t k = 0; k < issues.size() && k < max_issues; ++k) {
    if (k > 0) out += "; ";
    out += issues[k].location + ": " + issues[k].message;
  }
  if (issues.size() > max_issues) {
    out += "; ... (" + std::to_string(issues.size() - max_issues) + " more)";
  }
  return out;
}

ValidationReport Validate(const GameData& d) {
  ValidationReport report;
  auto issue = [&](std::string loc, std::string msg) {
    report.issues.push_back({std::move(loc), std::move(msg)});
  };
  if (d.n < 1) {
    issue("game", "state count must be at least 1");
    return report;
  }
  if (d.actions_max.size() != d.n || d.actions_min.size() != d.n ||
      d.payoff.size() != d.n || d.trans.size() != d.n) {
    issue("game", "per-state tables must have length n = " +
                      std::to_string(d.n));
    return report;
  }
  for (std::size_t i = 0; i < d.n; ++i) {
    const std::size_t m = d.actions_max[i].size();
    const std::size_t k = d.actions_min[i].size();
    if (m == 0) issue(Loc(i), "MAX action set is empty");
    if (k == 0) issue(Loc(i), "MIN action set is empty");
    if (d.payoff[i].size() != m || d.trans[i].size() != m) {
      issue(Loc(i), "payoff/trans must have one row per MAX action");
      continue;
    }
    for (std::size_t a = 0; a < m; ++a) {
      if (d.payoff[i][a].size() != k || d.trans[i][a].size() != k) {
        issue(Loc(i), "payoff/trans rows must have one entry per MIN action");
        continue;
      }
      for (std::size_t b = 0; b < k; ++b) {
        if (!std::isfinite(d.payoff[i][a][b])) {
          issue(Loc(i, a, b), "payoff is not finite");
        }
        const auto& row = d.trans[i][a][b];
        if (row.size() != d.n) {
          issue(Loc(i, a, b), "transition vector must have length n");
          continue;
        }
        double sum = 0.0;
        bool finite = true;
        for (std::size_t j = 0; j < d.n; ++j) {
          if (!std::isfinite(row[j])) {
            finite = false;
          } else if (row[j] < 0.0) {
            issue(Loc(i, a, b), "negative probability " + Fmt(row[j]) +
                                    " for next state " + std::to_string(j + 1));
          }
          sum += row[j];
        }
        if (!finite) {
          issue(Loc(i, a, b), "transition entry is not finite");
        } else if (std::abs(sum - 1.0) > kRowSumTol) {
          char buf[96];
          std::snprintf(buf, sizeof(buf), "row sum %.10g \xe2\x89\xa0 1", sum);
          issue(Loc(i, a, b), buf);
        }
      }
    }
  }
  return report;
}

FiniteGame::FiniteGame(GameData data) : data_(std::move(data)) {
  supports_.resize(data_.n);
  for (std::size_t i = 0; i < data_.n; ++i) {
    supports_[i].resize(data_.trans[i].size());
    for (std::size_t a = 0; a < data_.trans[i].size(); ++a) {
      supports_[i][a].resize(data_.trans[i][a].size());
      for (std::size_t b = 0; b < data_.trans[i][a].size(); ++b) {
        for (std::size_t j = 0; j < data_.n; ++j) {
          if (data_.trans[i][a][b][j] > kSupportTol) {
            supports_[i][a][b].push_back(j);
          }
        }
      }
    }
  }
}

FiniteGame FiniteGame::Create(GameData data) {
  ValidationReport report = Validate(data);
  if (!report.ok()) {
    throw ValidationError("invalid game: " + report.Summary());
  }
  return FiniteGame(std::move(data));
}

ValidationReport Validate(const FiniteGame& game) {
  return Validate(game.data());
}

StateSet Support(const FiniteGame& game, std::size_t i, std::size_t a,
                 std::size_t b) {
  if (i >= game.num_states() || a >= game.num_actions(Player::kMax, i) ||
      b >= game.num_actions(Player::kMin, i)) {
    throw IndexError("support: index out of range at " + Loc(i, a, b));
  }
  return StateSet::FromIndices(game.num_states(), game.support_indices(i, a, b));
}

FiniteGame Perturb(const FiniteGame& game, std::span<const double> g) {
  if (g.size() != game.num_states()) {
    throw DimensionError("perturb: vector has length " +
                         std::to_string(g.size()) + ", expected " +
                         std::to_string(game.num_states()));
  }
  GameData data = game.data();
  for (std::size_t i = 0; i < data.n; ++i) {
    for (auto& row : data.payoff[i]) {
      for (double& r : row) r = g[i] + r;
    }
  }
  return FiniteGame::Create(std::move(data));
}

}  // namespace ergodic
