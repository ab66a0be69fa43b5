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

// Coalitional games v: 2^N -> Q stored as explicit value tables, with the
// structural predicates (simple, null, equivalent players) and the standard
// constructions (weighted, unanimity, dual, linear combinations, unanimity
// coordinates).

#ifndef ROLLCALL_GAMES_HPP
#define ROLLCALL_GAMES_HPP

#include <bit>
#include <cstddef>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "rollcall/coalition.hpp"
#include "rollcall/errors.hpp"
#include "rollcall/rational.hpp"

namespace rollcall {

class CoalitionalGame {
 public:
  // `values[mask]` is v(S) for the coalition with that mask. Requires
  // exactly 2^n entries and v(∅) = 0.
  CoalitionalGame(int n, std::vector<Rational> values)
      : n_(n), values_(std::move(values)) {
    check_player_count(n);
    if (values_.size() != Coalition::table_size(n)) {
      throw InvalidArgument("game table for n = " + std::to_string(n) +
                            " needs " +
                            std::to_string(Coalition::table_size(n)) +
                            " values, got " + std::to_string(values_.size()));
    }
    if (values_[0] != 0) {
      throw InvalidArgument("v(∅) must be 0, got " + to_string(values_[0]));
    }
  }

  static CoalitionalGame zero(int n) {
    check_player_count(n);
    return CoalitionalGame(n, std::vector<Rational>(Coalition::table_size(n)));
  }

  int n() const { return n_; }
  Coalition::Mask grand_mask() const { return Coalition::full_mask(n_); }
  const Rational& grand_value() const { return values_.back(); }

  // Unchecked access by mask.
  const Rational& operator[](Coalition::Mask mask) const { return values_[mask]; }
  std::span<const Rational> values() const { return values_; }

  friend bool operator==(const CoalitionalGame&,
                         const CoalitionalGame&) = default;

 private:
  int n_;
  std::vector<Rational> values_;
};

// Per-player allocation; entry(i) is player i's value (1-based).
class PowerVector {
 public:
  explicit PowerVector(std::vector<Rational> entries)
      : entries_(std::move(entries)) {}
  static PowerVector zeros(int n) {
    return PowerVector(std::vector<Rational>(static_cast<std::size_t>(n)));
  }

  int n() const { return static_cast<int>(entries_.size()); }
  const Rational& operator()(int player) const {
    return entries_[static_cast<std::size_t>(player - 1)];
  }
  Rational& operator()(int player) {
    return entries_[static_cast<std::size_t>(player - 1)];
  }
  std::span<const Rational> entries() const { return entries_; }

  Rational sum() const {
    Rational total = 0;
    for (const auto& e : entries_) total += e;
    return total;
  }

  friend bool operator==(const PowerVector&, const PowerVector&) = default;

 private:
  std::vector<Rational> entries_;
};

inline std::string to_string(const PowerVector& phi) {
  std::string out = "(";
  for (int i = 1; i <= phi.n(); ++i) {
    if (i > 1) out += ", ";
    out += to_string(phi(i));
  }
  return out + ")";
}

inline const Rational& evaluate(const CoalitionalGame& game,
                                const Coalition& s) {
  if (s.n() != game.n()) {
    throw InvalidArgument("player-count mismatch: game has " +
                          std::to_string(game.n()) + " players, coalition " +
                          std::to_string(s.n()));
  }
  return game[s.mask()];
}

// v(S) = 1 iff the weights of S sum to at least the quota.
inline CoalitionalGame weighted_game(const Rational& quota,
                                     std::span<const Rational> weights) {
  const int n = static_cast<int>(weights.size());
  check_player_count(n);
  if (quota <= 0) {
    throw InvalidArgument("quota must be positive, got " + to_string(quota));
  }
  Rational total = 0;
  for (std::size_t k = 0; k < weights.size(); ++k) {
    if (weights[k] < 0) {
      throw InvalidArgument("weight of player " + std::to_string(k + 1) +
                            " is negative");
    }
    total += weights[k];
  }
  if (total < quota) {
    throw InvalidArgument("grand coalition losing: total weight " +
                          to_string(total) + " is below quota " +
                          to_string(quota));
  }
  // weight(S) = weight(S without its lowest player) + that player's weight.
  std::vector<Rational> weight(Coalition::table_size(n));
  std::vector<Rational> values(Coalition::table_size(n));
  for (Coalition::Mask s = 1; s < weight.size(); ++s) {
    const int low = std::countr_zero(s);
    weight[s] = weight[s & (s - 1)] + weights[static_cast<std::size_t>(low)];
    values[s] = weight[s] >= quota ? 1 : 0;
  }
  return CoalitionalGame(n, std::move(values));
}

inline CoalitionalGame weighted_game(const Rational& quota,
                                     const std::vector<Rational>& weights) {
  return weighted_game(quota, std::span<const Rational>(weights));
}

// u_T(S) = 1 iff T ⊆ S.
inline CoalitionalGame unanimity_game(int n, const Coalition& carrier) {
  check_player_count(n);
  if (carrier.n() != n) throw InvalidArgument("player-count mismatch");
  if (carrier.is_empty()) {
    throw InvalidArgument("unanimity carrier must be nonempty");
  }
  std::vector<Rational> values(Coalition::table_size(n));
  const Coalition::Mask t = carrier.mask();
  for (Coalition::Mask s = 0; s < values.size(); ++s) {
    if ((s & t) == t) values[s] = 1;
  }
  return CoalitionalGame(n, std::move(values));
}

// v*(S) = v(N) - v(N \ S).
inline CoalitionalGame dual(const CoalitionalGame& game) {
  const Coalition::Mask full = game.grand_mask();
  std::vector<Rational> values(Coalition::table_size(game.n()));
  for (Coalition::Mask s = 0; s <= full; ++s) {
    values[s] = game.grand_value() - game[full & ~s];
  }
  return CoalitionalGame(game.n(), std::move(values));
}

// {0,1}-valued, v(∅) = 0, v(N) = 1 and monotone. Monotonicity is checked on
// single-player extensions only, which implies it for all inclusions.
inline bool is_simple(const CoalitionalGame& game) {
  const Coalition::Mask full = game.grand_mask();
  if (game.grand_value() != 1) return false;
  for (Coalition::Mask s = 0; s <= full; ++s) {
    if (game[s] != 0 && game[s] != 1) return false;
  }
  for (Coalition::Mask s = 0; s <= full; ++s) {
    for (Coalition::Mask rest = full & ~s; rest != 0; rest &= rest - 1) {
      if (game[s] > game[s | (rest & -rest)]) return false;
    }
  }
  return true;
}

inline bool is_null_player(const CoalitionalGame& game, int player) {
  check_player(game.n(), player);
  const Coalition::Mask bit = Coalition::bit(player);
  for (Coalition::Mask s = 0; s <= game.grand_mask(); ++s) {
    if ((s & bit) == 0 && game[s] != game[s | bit]) return false;
  }
  return true;
}

inline bool are_equivalent(const CoalitionalGame& game, int i, int j) {
  check_player(game.n(), i);
  check_player(game.n(), j);
  if (i == j) {
    throw InvalidArgument("equivalence needs two distinct players, got " +
                          std::to_string(i) + " twice");
  }
  const Coalition::Mask bi = Coalition::bit(i);
  const Coalition::Mask bj = Coalition::bit(j);
  for (Coalition::Mask s = 0; s <= game.grand_mask(); ++s) {
    if ((s & (bi | bj)) == 0 && game[s | bi] != game[s | bj]) return false;
  }
  return true;
}

inline CoalitionalGame linear_combination(
    std::span<const Rational> coeffs, std::span<const CoalitionalGame> games) {
  if (games.empty() || coeffs.size() != games.size()) {
    throw InvalidArgument(
        "linear combination needs equally many (nonzero) coefficients and "
        "games, got " +
        std::to_string(coeffs.size()) + " and " +
        std::to_string(games.size()));
  }
  const int n = games.front().n();
  std::vector<Rational> values(Coalition::table_size(n));
  for (std::size_t k = 0; k < games.size(); ++k) {
    if (games[k].n() != n) {
      throw InvalidArgument("player-count mismatch in linear combination");
    }
    if (coeffs[k] == 0) continue;
    for (std::size_t s = 0; s < values.size(); ++s) {
      values[s] += coeffs[k] * games[k][static_cast<Coalition::Mask>(s)];
    }
  }
  return CoalitionalGame(n, std::move(values));
}

inline CoalitionalGame linear_combination(
    const std::vector<Rational>& coeffs,
    const std::vector<CoalitionalGame>& games) {
  return linear_combination(std::span<const Rational>(coeffs),
                            std::span<const CoalitionalGame>(games));
}

// Coordinates of a game in the unanimity basis (Harsanyi dividends),
// indexed by the carrier mask. Entry 0 is always 0.
class UnanimityCoordinates {
 public:
  UnanimityCoordinates(int n, std::vector<Rational> coeffs)
      : n_(n), coeffs_(std::move(coeffs)) {
    check_player_count(n);
    if (coeffs_.size() != Coalition::table_size(n)) {
      throw InvalidArgument("unanimity coordinates for n = " +
                            std::to_string(n) + " need " +
                            std::to_string(Coalition::table_size(n)) +
                            " entries");
    }
  }

  int n() const { return n_; }
  const Rational& operator[](Coalition::Mask carrier) const {
    return coeffs_[carrier];
  }
  std::span<const Rational> coefficients() const { return coeffs_; }

  // (carrier, coefficient) pairs with nonzero coefficient, by ascending mask.
  std::vector<std::pair<Coalition, Rational>> nonzero() const {
    std::vector<std::pair<Coalition, Rational>> out;
    for (Coalition::Mask t = 1; t < coeffs_.size(); ++t) {
      if (coeffs_[t] != 0) out.emplace_back(Coalition(n_, t), coeffs_[t]);
    }
    return out;
  }

 private:
  int n_;
  std::vector<Rational> coeffs_;
};

// Möbius inversion over the subset lattice, one dimension at a time:
// λ_T = Σ_{S ⊆ T} (-1)^{|T \ S|} v(S).
inline UnanimityCoordinates unanimity_decomposition(
    const CoalitionalGame& game) {
  std::vector<Rational> coeffs(game.values().begin(), game.values().end());
  const std::size_t size = coeffs.size();
  for (std::size_t bit = 1; bit < size; bit <<= 1) {
    for (std::size_t s = 0; s < size; ++s) {
      if (s & bit) coeffs[s] -= coeffs[s ^ bit];
    }
  }
  return UnanimityCoordinates(game.n(), std::move(coeffs));
}

// Σ_T λ_T u_T via the zeta transform v(S) = Σ_{T ⊆ S} λ_T.
inline CoalitionalGame from_unanimity_coordinates(
    const UnanimityCoordinates& coords) {
  std::vector<Rational> values(coords.coefficients().begin(),
                               coords.coefficients().end());
  const std::size_t size = values.size();
  if (values[0] != 0) {
    throw InvalidArgument("unanimity coordinate of ∅ must be 0");
  }
  for (std::size_t bit = 1; bit < size; bit <<= 1) {
    for (std::size_t s = 0; s < size; ++s) {
      if (s & bit) values[s] += values[s ^ bit];
    }
  }
  return CoalitionalGame(coords.n(), std::move(values));
}

}  // namespace rollcall

#endif  // ROLLCALL_GAMES_HPP
