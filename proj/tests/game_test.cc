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
#include <vector>

#include "ergodic/errors.h"
#include "ergodic/fixtures.h"
#include "ergodic/game_io.h"
#include "ergodic/json_writer.h"
#include "ergodic/state_set.h"
#include "gtest/gtest.h"
#include "test_util.h"

namespace ergodic {
namespace {

using testing::TempDir;

GameData OneStateData(std::vector<double> row) {
  GameData d;
  d.n = row.size();
  d.actions_max.assign(d.n, {"a"});
  d.actions_min.assign(d.n, {"b"});
  d.payoff.assign(d.n, {{0.0}});
  d.trans.assign(d.n, {{std::vector<double>(d.n, 0.0)}});
  for (std::size_t i = 0; i < d.n; ++i) d.trans[i][0][0] = row;
  return d;
}

TEST(StateSetTest, BasicOperations) {
  const StateSet s = StateSet::FromIndices(4, {0, 2});
  EXPECT_EQ(s.count(), 2u);
  EXPECT_EQ(s.ToString(), "{1,3}");
  EXPECT_EQ(s.complement(), StateSet::FromMask(4, 0b1010));
  EXPECT_TRUE(s.is_disjoint_from(s.complement()));
  EXPECT_EQ(s.united(s.complement()), StateSet::Full(4));
  EXPECT_TRUE(s.is_subset_of(StateSet::Full(4)));
  EXPECT_EQ(s.labels(), (std::vector<std::size_t>{1, 3}));
  EXPECT_TRUE(StateSet(3).empty());
}

TEST(ValidateTest, OneStateSelfLoopIsValid) {
  EXPECT_TRUE(Validate(OneStateData({1.0})).ok());
}

TEST(ValidateTest, RowSumOffByTenthIsReported) {
  GameData d = OneStateData({0.5, 0.6});
  const ValidationReport r = Validate(d);
  ASSERT_FALSE(r.ok());
  EXPECT_EQ(r.issues[0].location, "(i,a,b)=(1,1,1)");
  EXPECT_NE(r.issues[0].message.find("row sum 1.1"), std::string::npos)
      << r.issues[0].message;
  EXPECT_THROW(FiniteGame::Create(d), ValidationError);
}

TEST(ValidateTest, GammaGameRowsAreStochastic) {
  const FiniteGame g = fixtures::GammaGame();
  EXPECT_TRUE(Validate(g).ok());
  // Rows of the gamma-game at gamma = 1/2 on the grid {0, 1/2, 1}.
  const double grid[3] = {0.0, 0.5, 1.0};
  for (int a = 0; a < 3; ++a) {
    for (int b = 0; b < 3; ++b) {
      const double ga = 0.5 * grid[a], gb = 0.5 * grid[b];
      const std::vector<double> p1 = {ga, grid[b] * (1 - ga),
                                      (1 - grid[b]) * (1 - ga)};
      const std::vector<double> p2 = {gb, grid[a] * (1 - gb),
                                      (1 - grid[a]) * (1 - gb)};
      for (int j = 0; j < 3; ++j) {
        EXPECT_DOUBLE_EQ(g.transition(0, a, b)[j], p1[j]);
        EXPECT_DOUBLE_EQ(g.transition(1, a, b)[j], p2[j]);
      }
      EXPECT_EQ(g.transition(2, a, b)[2], 1.0);
    }
  }
}

TEST(ValidateTest, ReportsEveryKindOfIssue) {
  GameData d = OneStateData({1.0});
  d.payoff[0][0][0] = std::nan("");
  EXPECT_FALSE(Validate(d).ok());
  d = OneStateData({1.0});
  d.actions_max[0].clear();
  d.payoff[0].clear();
  d.trans[0].clear();
  EXPECT_FALSE(Validate(d).ok());
  d = OneStateData({1.1, -0.1});
  EXPECT_FALSE(Validate(d).ok());
}

TEST(GameIoTest, SaveLoadRoundTripIsExact) {
  TempDir dir;
  const FiniteGame circle = fixtures::CircleGame({0.1, 1.0 / 3.0});
  SaveGame(circle, dir.File("c.json"));
  EXPECT_EQ(LoadGame(dir.File("c.json")), circle);
  const FiniteGame gamma = fixtures::GammaGame();
  SaveGame(gamma, dir.File("g.json"));
  EXPECT_EQ(LoadGame(dir.File("g.json")), gamma);
}

TEST(GameIoTest, MissingTransIsSchemaError) {
  TempDir dir;
  nlohmann::json j = GameToJson(fixtures::CircleGame());
  j.erase("trans");
  WriteJsonFile(dir.File("bad.json"), j);
  EXPECT_THROW(LoadGame(dir.File("bad.json")), SchemaError);
}

TEST(GameIoTest, NegativeProbabilityIsValidationError) {
  TempDir dir;
  nlohmann::json j = GameToJson(fixtures::CircleGame());
  j["trans"][0][0][0] = {-0.1, 1.1};
  WriteJsonFile(dir.File("bad.json"), j);
  EXPECT_THROW(LoadGame(dir.File("bad.json")), ValidationError);
}

TEST(GameIoTest, MalformedJsonIsParseError) {
  TempDir dir;
  EXPECT_THROW(LoadGame(dir.Write("bad.json", "{\"n\": 2,")), ParseError);
  EXPECT_THROW(LoadGame(dir.File("missing.json")), IoError);
}

TEST(GameIoTest, NearStochasticRowsAreRenormalized) {
  TempDir dir;
  nlohmann::json j = GameToJson(fixtures::CircleGame());
  j["trans"][0][0][0] = {0.0, 1.0 + 5e-10};
  WriteJsonFile(dir.File("near.json"), j);
  const FiniteGame g = LoadGame(dir.File("near.json"));
  EXPECT_EQ(g.transition(0, 0, 0)[1], 1.0);
  j["trans"][0][0][0] = {0.0, 1.0 + 2e-9};
  WriteJsonFile(dir.File("far.json"), j);
  EXPECT_THROW(LoadGame(dir.File("far.json")), ValidationError);
}

TEST(GameIoTest, NumericLabelsBecomeStrings) {
  const FiniteGame g = fixtures::GammaGame();
  EXPECT_EQ(g.data().actions_max[0][1], "0.5");
}

TEST(SupportTest, GammaGameSupports) {
  const FiniteGame g = fixtures::GammaGame();
  for (std::size_t a = 0; a < 3; ++a) {
    for (std::size_t b = 0; b < 3; ++b) {
      EXPECT_EQ(Support(g, 2, a, b), StateSet::FromIndices(3, {2}));
    }
  }
  // a = 1, b = 0: (gamma a, b(1 - gamma a), (1 - b)(1 - gamma a)) =
  // (0.5, 0, 0.5).
  EXPECT_EQ(Support(g, 0, 2, 0), StateSet::FromIndices(3, {0, 2}));
  EXPECT_THROW(Support(g, 3, 0, 0), IndexError);
  EXPECT_THROW(Support(g, 0, 3, 0), IndexError);
}

TEST(SupportTest, SelfLoop) {
  const FiniteGame g = FiniteGame::Create(OneStateData({1.0}));
  EXPECT_EQ(Support(g, 0, 0, 0), StateSet::Full(1));
}

TEST(SupportTest, DustBelowThresholdIsIgnored) {
  const FiniteGame g = FiniteGame::Create(OneStateData({1.0 - 1e-13, 1e-13}));
  EXPECT_EQ(Support(g, 0, 0, 0), StateSet::FromIndices(2, {0}));
}

TEST(PerturbTest, Examples) {
  const FiniteGame circle = fixtures::CircleGame();
  const std::vector<double> zero = {0.0, 0.0};
  EXPECT_EQ(Perturb(circle, zero), circle);
  const std::vector<double> g = {1.0, 0.0};
  const FiniteGame p = Perturb(circle, g);
  EXPECT_EQ(p.payoff(0, 0, 0), 1.0);
  EXPECT_EQ(p.payoff(1, 0, 0), 0.0);
  EXPECT_THROW(Perturb(circle, std::vector<double>{1.0}), DimensionError);
}

TEST(PerturbTest, PropertiesOnRandomGames) {
  TempDir dir;
  for (int k = 0; k < 20; ++k) {
    SplitMix64 rng = SplitMix64::Stream(11, k);
    fixtures::RandomGameParams params;
    params.n = 2 + k % 4;
    const FiniteGame game = fixtures::RandomGame(rng, params);
    std::vector<double> g(params.n), minus(params.n);
    for (std::size_t i = 0; i < params.n; ++i) {
      g[i] = std::ldexp(std::floor(rng.Uniform(-64, 64)), -4);  // exact
      minus[i] = -g[i];
    }
    const FiniteGame p = Perturb(game, g);
    // Inverse, up to the rounding of r + g.
    const FiniteGame back = Perturb(p, minus);
    EXPECT_EQ(back.data().trans, game.data().trans);
    // Commutes with save/load.
    SaveGame(game, dir.File("g.json"));
    EXPECT_EQ(Perturb(LoadGame(dir.File("g.json")), g), p);
    // Supports untouched.
    for (std::size_t i = 0; i < params.n; ++i) {
      for (std::size_t a = 0; a < game.num_actions(Player::kMax, i); ++a) {
        for (std::size_t b = 0; b < game.num_actions(Player::kMin, i); ++b) {
          EXPECT_EQ(Support(p, i, a, b), Support(game, i, a, b));
          EXPECT_NEAR(back.payoff(i, a, b), game.payoff(i, a, b), 1e-15);
          double sum = 0.0;
          for (double v : game.transition(i, a, b)) {
            EXPECT_GE(v, 0.0);
            sum += v;
          }
          EXPECT_NEAR(sum, 1.0, kRowSumTol);
        }
      }
    }
  }
}

}  // namespace
}  // namespace ergodic
