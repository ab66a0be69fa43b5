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

// Voting power in a small weighted committee under three vote models: a
// correlated but exchangeable one (same as Shapley-Shubik) and two
// non-exchangeable ones (which are not), followed by the separating game the
// library builds for the second.

#include <iostream>
#include <vector>

#include "rollcall/rollcall.hpp"

using rollcall::Rational;

int main() {
  const std::vector<Rational> weights = {3, 2, 1, 1};
  const auto game = rollcall::weighted_game(Rational(4), weights);
  std::cout << "Shapley-Shubik index: "
            << to_string(rollcall::shapley_shubik_index(game)) << "\n";

  // Blocs of 0, 2 or 4 supporters are likely; single defections are rare.
  const auto herd = rollcall::from_size_profile(std::vector<Rational>{
      Rational(3, 10), Rational(1, 20), Rational(3, 10), Rational(1, 20),
      Rational(3, 10)});
  std::cout << "exchangeable herd:    "
            << to_string(rollcall::rollcall_value_exact(game, herd)) << "\n";

  const auto biased = rollcall::independent_distribution(std::vector<Rational>{
      Rational(9, 10), Rational(1, 2), Rational(1, 2), Rational(1, 10)});
  std::cout << "independent, biased:  "
            << to_string(rollcall::rollcall_value_exact(game, biased)) << "\n";

  if (const auto w = rollcall::witness_non_exchangeability(biased)) {
    std::cout << "players " << w->violation.i << " and " << w->violation.j
              << " are equivalent in the separating game, yet\n"
              << "  roll-call value " << to_string(w->rollcall_value) << "\n"
              << "  Shapley value   " << to_string(w->shapley_value) << "\n";
  }
  return 0;
}
