// Copyright 2026 The Rollcall Authors
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

#include <gtest/gtest.h>

#include <vector>

#include "rollcall/games.hpp"
#include "rollcall/shapley.hpp"
#include "test_support.hpp"

namespace rollcall {
namespace {

using testing::pv;
using testing::q;

CoalitionalGame game_3_211() {
  return weighted_game(Rational(3), std::vector<Rational>{2, 1, 1});
}

TEST(ShapleyByPermutations, Examples) {
  EXPECT_EQ(shapley_by_permutations(unanimity_game(3, Coalition::grand(3))),
            pv({q(1, 3), q(1, 3), q(1, 3)}));
  EXPECT_EQ(shapley_by_permutations(unanimity_game(2, Coalition::of(2, {1}))),
            pv({1, 0}));
  EXPECT_EQ(shapley_by_permutations(game_3_211()), pv({q(2, 3), q(1, 6), q(1, 6)}));
}

TEST(ShapleyByPermutations, MatchesHandRolledOracle) {
  // [3; 2,1,1]: player 1 swings in 4 of 6 orders, players 2 and 3 in 1 each.
  EXPECT_EQ(testing::oracle_shapley(game_3_211()), pv({q(2, 3), q(1, 6), q(1, 6)}));
  testing::Rng rng(21);
  for (int trial = 0; trial < 30; ++trial) {
    const auto v = testing::random_game(rng, testing::uniform_int(rng, 1, 5));
    EXPECT_EQ(shapley_by_permutations(v), testing::oracle_shapley(v));
  }
}

TEST(ShapleyByPermutations, GuardsEnumerationSize) {
  const auto big = unanimity_game(9, Coalition::grand(9));
  EXPECT_THROW(shapley_by_permutations(big), GuardError);
  EXPECT_EQ(shapley_by_permutations(big, Guard::kUnchecked),
            shapley_by_coalitions(big));
}

TEST(ShapleyByCoalitions, Examples) {
  EXPECT_EQ(shapley_by_coalitions(game_3_211()), pv({q(2, 3), q(1, 6), q(1, 6)}));
  EXPECT_EQ(shapley_by_coalitions(dual(game_3_211())),
            pv({q(2, 3), q(1, 6), q(1, 6)}));
  testing::Rng rng(22);
  const auto v = testing::random_game_with_null_player(rng, 4, 3);
  EXPECT_EQ(shapley_by_coalitions(v)(3), 0);
}

TEST(ShapleyByCoalitions, WeightsSumToOneOverN) {
  for (int n = 1; n <= 10; ++n) {
    const auto w = shapley_weights(n);
    Rational total = 0;
    for (int k = 0; k < n; ++k) total += w[static_cast<std::size_t>(k)] * Rational(binomial(n - 1, k));
    EXPECT_EQ(total, 1) << "n = " << n;
  }
}

TEST(ShapleyByCoalitions, AgreesWithPermutationDefinition) {
  testing::Rng rng(23);
  for (int trial = 0; trial < 120; ++trial) {
    const auto v = testing::random_game(rng, testing::uniform_int(rng, 1, 6));
    EXPECT_EQ(shapley_by_coalitions(v), shapley_by_permutations(v));
  }
}

TEST(ShapleyProperties, EfficiencySymmetryNullPlayerDuality) {
  testing::Rng rng(24);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = testing::uniform_int(rng, 2, 6);
    const auto v = testing::random_game(rng, n);
    const auto phi = shapley_by_coalitions(v);
    EXPECT_EQ(phi.sum(), v.grand_value());
    EXPECT_EQ(shapley_by_coalitions(dual(v)), phi);

    const int i = testing::uniform_int(rng, 1, n);
    const auto with_null = testing::random_game_with_null_player(rng, n, i);
    ASSERT_TRUE(is_null_player(with_null, i));
    EXPECT_EQ(shapley_by_coalitions(with_null)(i), 0);

    int j = testing::uniform_int(rng, 1, n - 1);
    if (j >= i) ++j;
    const auto with_pair = testing::random_game_with_equivalent_pair(rng, n, i, j);
    ASSERT_TRUE(are_equivalent(with_pair, i, j));
    const auto phi_pair = shapley_by_coalitions(with_pair);
    EXPECT_EQ(phi_pair(i), phi_pair(j));
  }
}

TEST(ShapleyProperties, Linearity) {
  testing::Rng rng(25);
  for (int trial = 0; trial < 60; ++trial) {
    const int n = testing::uniform_int(rng, 1, 6);
    const auto u = testing::random_game(rng, n);
    const auto v = testing::random_game(rng, n);
    const Rational a = testing::random_rational(rng);
    const Rational b = testing::random_rational(rng);
    const auto combined = shapley_by_coalitions(
        linear_combination(std::vector<Rational>{a, b}, std::vector<CoalitionalGame>{u, v}));
    const auto pu = shapley_by_coalitions(u);
    const auto pvv = shapley_by_coalitions(v);
    for (int i = 1; i <= n; ++i) EXPECT_EQ(combined(i), a * pu(i) + b * pvv(i));
  }
}

TEST(ShapleyProperties, UnanimityBasisValues) {
  for (int n = 1; n <= 6; ++n) {
    for (Coalition::Mask t = 1; t < Coalition::table_size(n); ++t) {
      const Coalition carrier(n, t);
      const auto phi = shapley_by_coalitions(unanimity_game(n, carrier));
      for (int i = 1; i <= n; ++i) {
        EXPECT_EQ(phi(i), carrier.contains(i) ? Rational(1, carrier.size()) : 0);
      }
    }
  }
}

TEST(ShapleyShubikIndex, Examples) {
  EXPECT_EQ(shapley_shubik_index(game_3_211()), pv({q(2, 3), q(1, 6), q(1, 6)}));
  EXPECT_EQ(shapley_shubik_index(unanimity_game(4, Coalition::grand(4))),
            pv({q(1, 4), q(1, 4), q(1, 4), q(1, 4)}));
  EXPECT_EQ(shapley_shubik_index(weighted_game(Rational(1), std::vector<Rational>{1, 0, 0})),
            pv({1, 0, 0}));
  EXPECT_THROW(shapley_shubik_index(CoalitionalGame(2, {0, 2, 0, 1})),
               InvalidArgument);
}

}  // namespace
}  // namespace rollcall
