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

#include <vector>

#include "ergodic/crosscheck.h"
#include "ergodic/errors.h"
#include "ergodic/fixtures.h"
#include "ergodic/random.h"
#include "gtest/gtest.h"
#include "oracles.h"

namespace ergodic {
namespace {

using Sets = std::vector<StateSet>;

StateSet S(std::size_t n, std::initializer_list<std::size_t> labels) {
  StateSet s(n);
  for (std::size_t l : labels) s.insert(l - 1);
  return s;
}

std::vector<FiniteGame> FixtureGames() {
  return {fixtures::SquareGame(), fixtures::CircleGame(),
          fixtures::TriangleGame(), fixtures::GammaGame(),
          fixtures::MatchingPenniesGame(3), fixtures::ConstantGame(1.0)};
}

std::vector<FiniteGame> RandomGames(int count, std::uint64_t seed) {
  std::vector<FiniteGame> out;
  for (int k = 0; k < count; ++k) {
    SplitMix64 rng = SplitMix64::Stream(seed, k);
    fixtures::RandomGameParams params;
    params.n = 2 + k % 4;
    params.stay_prob = 0.2 * (k / 4 % 4);
    out.push_back(fixtures::RandomGame(rng, params));
  }
  return out;
}

TEST(IsDominionTest, FullSetIsAlwaysADominion) {
  for (const FiniteGame& g : FixtureGames()) {
    EXPECT_TRUE(IsDominion(g, Player::kMax, StateSet::Full(g.num_states())));
    EXPECT_TRUE(IsDominion(g, Player::kMin, StateSet::Full(g.num_states())));
  }
  EXPECT_THROW(IsDominion(fixtures::CircleGame(), Player::kMax, StateSet(2)),
               EmptySet);
}

TEST(IsDominionTest, GammaGameDominions) {
  const FiniteGame g = fixtures::GammaGame();
  EXPECT_EQ(EnumerateDominions(g, Player::kMax).dominions,
            (Sets{S(3, {3}), S(3, {1, 2, 3})}));
  EXPECT_EQ(EnumerateDominions(g, Player::kMin).dominions,
            (Sets{S(3, {3}), S(3, {1, 3}), S(3, {2, 3}), S(3, {1, 2, 3})}));
}

TEST(IsDominionTest, TriangleGameDominions) {
  const FiniteGame g = fixtures::TriangleGame();
  EXPECT_TRUE(IsDominion(g, Player::kMax, S(2, {1})));
  EXPECT_TRUE(IsDominion(g, Player::kMin, S(2, {2})));
  EXPECT_FALSE(IsDominion(g, Player::kMax, S(2, {2})));
  EXPECT_FALSE(IsDominion(g, Player::kMin, S(2, {1})));
}

TEST(IsDominionTest, MatchesDefinitionOnRandomGames) {
  for (const FiniteGame& g : RandomGames(60, 31)) {
    const std::size_t n = g.num_states();
    for (std::uint64_t m = 1; m < (1u << n); ++m) {
      const StateSet d = StateSet::FromMask(n, m);
      EXPECT_EQ(IsDominion(g, Player::kMax, d),
                testing::IsDominionOracle(g.data(), true, m));
      EXPECT_EQ(IsDominion(g, Player::kMin, d),
                testing::IsDominionOracle(g.data(), false, m));
    }
  }
}

TEST(LargestDominionWithinTest, Examples) {
  const FiniteGame g = fixtures::GammaGame();
  EXPECT_EQ(LargestDominionWithin(g, Player::kMax, StateSet::Full(3)),
            StateSet::Full(3));
  EXPECT_TRUE(LargestDominionWithin(g, Player::kMax, S(3, {1, 2})).empty());
  EXPECT_EQ(LargestDominionWithin(g, Player::kMin, S(3, {1, 3})),
            S(3, {1, 3}));
}

TEST(DominionPropertyTest, ClosureUnionAndMonotonicity) {
  std::vector<FiniteGame> games = FixtureGames();
  for (FiniteGame& g : RandomGames(60, 32)) games.push_back(std::move(g));
  for (const FiniteGame& g : games) {
    const std::size_t n = g.num_states();
    for (Player p : {Player::kMax, Player::kMin}) {
      const Sets doms = EnumerateDominions(g, p).dominions;
      // Union closure.
      for (const StateSet& a : doms) {
        for (const StateSet& b : doms) {
          EXPECT_TRUE(IsDominion(g, p, a.united(b)));
        }
      }
      for (std::uint64_t m = 0; m < (1u << n); ++m) {
        const StateSet s = StateSet::FromMask(n, m);
        // Largest dominion inside S is the union of those enumerated.
        StateSet expect(n);
        for (const StateSet& d : doms) {
          if (d.is_subset_of(s)) expect = expect.united(d);
        }
        const StateSet got = LargestDominionWithin(g, p, s);
        EXPECT_EQ(got, expect);
        // Monotone in S.
        for (std::size_t j = 0; j < n; ++j) {
          StateSet bigger = s;
          bigger.insert(j);
          EXPECT_TRUE(got.is_subset_of(LargestDominionWithin(g, p, bigger)));
        }
      }
    }
  }
}

TEST(DominionPropertyTest, InvariantUnderPerturbation) {
  for (const FiniteGame& g : RandomGames(30, 33)) {
    std::vector<double> shift(g.num_states());
    SplitMix64 rng(g.num_states());
    for (double& v : shift) v = rng.Uniform(-100, 100);
    const FiniteGame p = Perturb(g, shift);
    for (Player pl : {Player::kMax, Player::kMin}) {
      EXPECT_EQ(EnumerateDominions(g, pl).dominions,
                EnumerateDominions(p, pl).dominions);
    }
  }
}

TEST(EnumerationTest, OrderAndCap) {
  std::vector<std::uint64_t> masks;
  ForEachSubsetByCardinality(3, [&](std::uint64_t m) { masks.push_back(m); });
  EXPECT_EQ(masks, (std::vector<std::uint64_t>{0b001, 0b010, 0b100, 0b011,
                                               0b101, 0b110, 0b111}));
  const FiniteGame big = fixtures::MatchingPenniesGame(5);
  EXPECT_THROW(EnumerateDominions(big, Player::kMax, 4), TooLarge);
  EXPECT_THROW(DisjointDominions(big, 4), TooLarge);
  EXPECT_THROW(SliceLimitVerdict(big, 4), TooLarge);
}

TEST(DisjointDominionsTest, Examples) {
  const ErgodicityVerdict tri = DisjointDominions(fixtures::TriangleGame());
  EXPECT_FALSE(tri.ergodic);
  ASSERT_TRUE(tri.witness.has_value());
  EXPECT_EQ(tri.witness->first, S(2, {1}));
  EXPECT_EQ(tri.witness->second, S(2, {2}));
  EXPECT_TRUE(DisjointDominions(fixtures::CircleGame()).ergodic);
  EXPECT_FALSE(DisjointDominions(fixtures::CircleGame()).witness.has_value());
  EXPECT_TRUE(DisjointDominions(fixtures::GammaGame()).ergodic);
  EXPECT_FALSE(DisjointDominions(fixtures::SquareGame()).ergodic);
}

TEST(DisjointDominionsTest, MatchesOracleAndWitnessesAreValid) {
  for (const FiniteGame& g : RandomGames(120, 34)) {
    const ErgodicityVerdict v = DisjointDominions(g);
    EXPECT_EQ(v.ergodic, testing::ErgodicOracle(g.data()));
    if (!v.ergodic) {
      const auto& [i, j] = *v.witness;
      EXPECT_TRUE(IsDominion(g, Player::kMax, i));
      EXPECT_TRUE(IsDominion(g, Player::kMin, j));
      EXPECT_TRUE(i.is_disjoint_from(j));
    }
  }
}

TEST(SliceLimitTest, Examples) {
  const FiniteGame g = fixtures::GammaGame();
  EXPECT_TRUE(SliceLimitTest(g, StateSet::Full(3), Player::kMax));
  EXPECT_TRUE(SliceLimitTest(g, StateSet::Full(3), Player::kMin));
  EXPECT_FALSE(SliceLimitTest(g, S(3, {1, 2}), Player::kMax));
  EXPECT_TRUE(SliceLimitTest(g, S(3, {1, 3}), Player::kMin));
  const SliceLimitTrace tr = TraceSliceLimit(g, S(3, {1, 2}), Player::kMax);
  EXPECT_EQ(tr.values.size(), kSliceKappas.size());
  EXPECT_FALSE(tr.bounded);
}

// The finite-game form of the dominion/asymptotics lemma, on every subset of
// every fixture and random game.
TEST(SliceLimitTest, AgreesWithIsDominionEverywhere) {
  std::vector<FiniteGame> games = FixtureGames();
  for (FiniteGame& g : RandomGames(120, 35)) games.push_back(std::move(g));
  for (const FiniteGame& g : games) {
    const std::size_t n = g.num_states();
    for (std::uint64_t m = 1; m < (1u << n); ++m) {
      const StateSet d = StateSet::FromMask(n, m);
      for (Player p : {Player::kMax, Player::kMin}) {
        EXPECT_EQ(SliceLimitTest(g, d, p), IsDominion(g, p, d))
            << PlayerName(p) << " " << d.ToString();
      }
    }
  }
}

}  // namespace
}  // namespace ergodic
