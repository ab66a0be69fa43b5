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

// The Shapley value, by the permutation definition (used as an oracle) and
// by the coalition-weight formula (used everywhere else).

#ifndef ROLLCALL_SHAPLEY_HPP
#define ROLLCALL_SHAPLEY_HPP

#include <algorithm>
#include <bit>
#include <numeric>
#include <string>
#include <vector>

#include "rollcall/coalition.hpp"
#include "rollcall/errors.hpp"
#include "rollcall/games.hpp"
#include "rollcall/rational.hpp"

namespace rollcall {

inline constexpr int kMaxPermutationPlayers = 8;

// kUnchecked skips the enumeration-size guards (benchmarking only).
enum class Guard { kEnforce, kUnchecked };

// (1/n!) Σ_π [v(P_i^π ∪ {i}) - v(P_i^π)], enumerating orders with
// std::next_permutation.
inline PowerVector shapley_by_permutations(const CoalitionalGame& game,
                                           Guard guard = Guard::kEnforce) {
  const int n = game.n();
  if (guard == Guard::kEnforce && n > kMaxPermutationPlayers) {
    throw GuardError("shapley_by_permutations: n = " + std::to_string(n) +
                     " exceeds the permutation guard of " +
                     std::to_string(kMaxPermutationPlayers) + " players");
  }
  std::vector<int> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), 1);
  std::vector<Rational> sums(static_cast<std::size_t>(n));
  do {
    Coalition::Mask before = 0;
    for (int p : order) {
      const Coalition::Mask after = before | Coalition::bit(p);
      sums[static_cast<std::size_t>(p - 1)] += game[after] - game[before];
      before = after;
    }
  } while (std::next_permutation(order.begin(), order.end()));
  const Rational orders(factorial(static_cast<unsigned long>(n)));
  for (auto& s : sums) s /= orders;
  return PowerVector(std::move(sums));
}

// |S|!(n-|S|-1)!/n! for |S| = 0..n-1.
inline std::vector<Rational> shapley_weights(int n) {
  std::vector<Rational> w(static_cast<std::size_t>(n));
  const Integer total = factorial(static_cast<unsigned long>(n));
  for (int k = 0; k < n; ++k) {
    w[static_cast<std::size_t>(k)] =
        Rational(factorial(static_cast<unsigned long>(k)) *
                     factorial(static_cast<unsigned long>(n - k - 1)),
                 total);
    w[static_cast<std::size_t>(k)].canonicalize();
  }
  return w;
}

// φ_i = Σ_{S ⊆ N\{i}} |S|!(n-|S|-1)!/n! [v(S ∪ {i}) - v(S)]. Marginal
// differences are summed per coalition size first so each weight is applied
// once per player.
inline PowerVector shapley_by_coalitions(const CoalitionalGame& game) {
  const int n = game.n();
  const auto un = static_cast<std::size_t>(n);
  const Coalition::Mask full = game.grand_mask();
  std::vector<Rational> by_size(un * un);  // [player][|S|]
  Rational diff;
  for (Coalition::Mask s = 0; s < full; ++s) {
    const auto k = static_cast<std::size_t>(std::popcount(s));
    for (Coalition::Mask rest = full & ~s; rest != 0; rest &= rest - 1) {
      const Coalition::Mask b = rest & -rest;
      diff = game[s | b] - game[s];
      if (diff != 0) {
        by_size[static_cast<std::size_t>(std::countr_zero(b)) * un + k] += diff;
      }
    }
  }
  const auto w = shapley_weights(n);
  std::vector<Rational> phi(un);
  for (std::size_t i = 0; i < un; ++i) {
    for (std::size_t k = 0; k < un; ++k) {
      if (by_size[i * un + k] != 0) phi[i] += w[k] * by_size[i * un + k];
    }
  }
  return PowerVector(std::move(phi));
}

inline PowerVector shapley_shubik_index(const CoalitionalGame& game) {
  if (!is_simple(game)) throw InvalidArgument("SSI requires a simple game");
  return shapley_by_coalitions(game);
}

}  // namespace rollcall

#endif  // ROLLCALL_SHAPLEY_HPP
