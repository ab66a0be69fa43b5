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

// Constructive side of the characterization "φ^p = φ for every game iff p is
// exchangeable": the subset-lattice matrix M_{R,S} = 1/(1+|R\S|) and its
// closed-form inverse, the binomial identities behind that inverse, the
// separating games v_X, and a witness builder that turns any exchangeability
// violation into a game on which φ^p and φ differ.

#ifndef ROLLCALL_CHARACTERIZATION_HPP
#define ROLLCALL_CHARACTERIZATION_HPP

#include <bit>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "rollcall/coalition.hpp"
#include "rollcall/distributions.hpp"
#include "rollcall/errors.hpp"
#include "rollcall/games.hpp"
#include "rollcall/rational.hpp"
#include "rollcall/roll_call.hpp"
#include "rollcall/shapley.hpp"

namespace rollcall {

inline constexpr int kMaxLemmaGround = 8;
inline constexpr int kMaxSeparatingPlayers = 10;

// Dense 2^m × 2^m rational matrix indexed by subset masks of a ground set of
// size m.
class LemmaMatrix {
 public:
  LemmaMatrix(int m, std::vector<Rational> entries)
      : m_(m), dim_(std::size_t{1} << m), entries_(std::move(entries)) {
    if (entries_.size() != dim_ * dim_) {
      throw InvalidArgument("matrix entry count does not match 4^m");
    }
  }

  int m() const { return m_; }
  std::size_t dim() const { return dim_; }
  const Rational& operator()(std::size_t row, std::size_t col) const {
    return entries_[row * dim_ + col];
  }

  friend bool operator==(const LemmaMatrix&, const LemmaMatrix&) = default;

 private:
  int m_;
  std::size_t dim_;
  std::vector<Rational> entries_;
};

namespace detail {

inline void check_ground_size(int m) {
  if (m < 0) throw InvalidArgument("ground set size must be non-negative");
  if (m > kMaxLemmaGround) {
    throw GuardError("ground set size " + std::to_string(m) +
                     " exceeds the dense matrix guard of " +
                     std::to_string(kMaxLemmaGround));
  }
}

}  // namespace detail

// 1 / (1 + |R \ S|).
inline Rational lemma_entry(std::uint32_t r, std::uint32_t s) {
  return Rational(1, 1 + std::popcount(r & ~s));
}

// C(m+1, m+|R\S|) · (-1)^{|R Δ S|}; zero once |R \ S| >= 2.
inline Rational lemma_inverse_entry(int m, std::uint32_t r, std::uint32_t s) {
  Rational out(binomial(m + 1, m + std::popcount(r & ~s)));
  if (std::popcount(r ^ s) % 2 != 0) out = -out;
  return out;
}

inline LemmaMatrix lemma_matrix(int m) {
  detail::check_ground_size(m);
  const std::size_t dim = std::size_t{1} << m;
  std::vector<Rational> entries(dim * dim);
  for (std::size_t r = 0; r < dim; ++r) {
    for (std::size_t s = 0; s < dim; ++s) {
      entries[r * dim + s] = lemma_entry(static_cast<std::uint32_t>(r),
                                         static_cast<std::uint32_t>(s));
    }
  }
  return LemmaMatrix(m, std::move(entries));
}

inline LemmaMatrix lemma_matrix_inverse(int m) {
  detail::check_ground_size(m);
  const std::size_t dim = std::size_t{1} << m;
  std::vector<Rational> entries(dim * dim);
  for (std::size_t r = 0; r < dim; ++r) {
    for (std::size_t s = 0; s < dim; ++s) {
      entries[r * dim + s] = lemma_inverse_entry(
          m, static_cast<std::uint32_t>(r), static_cast<std::uint32_t>(s));
    }
  }
  return LemmaMatrix(m, std::move(entries));
}

// Exact product; zero entries of the right factor are skipped.
inline LemmaMatrix multiply(const LemmaMatrix& a, const LemmaMatrix& b) {
  if (a.m() != b.m()) throw InvalidArgument("matrix size mismatch");
  const std::size_t dim = a.dim();
  std::vector<std::vector<std::size_t>> support(dim);
  for (std::size_t k = 0; k < dim; ++k) {
    for (std::size_t j = 0; j < dim; ++j) {
      if (b(k, j) != 0) support[k].push_back(j);
    }
  }
  std::vector<Rational> out(dim * dim);
  for (std::size_t i = 0; i < dim; ++i) {
    Rational* row = &out[i * dim];
    for (std::size_t k = 0; k < dim; ++k) {
      const Rational& aik = a(i, k);
      if (aik == 0) continue;
      for (std::size_t j : support[k]) row[j] += aik * b(k, j);
    }
  }
  return LemmaMatrix(a.m(), std::move(out));
}

inline bool is_identity(const LemmaMatrix& a) {
  for (std::size_t i = 0; i < a.dim(); ++i) {
    for (std::size_t j = 0; j < a.dim(); ++j) {
      if (a(i, j) != (i == j ? 1 : 0)) return false;
    }
  }
  return true;
}

inline bool verify_lemma(int m) {
  return is_identity(multiply(lemma_matrix(m), lemma_matrix_inverse(m)));
}

// A summation identity evaluated both ways: `lhs` by direct summation,
// `rhs` by its closed form.
struct IdentityCheck {
  Rational lhs;
  Rational rhs;
  bool holds() const { return lhs == rhs; }
};

namespace detail {

inline void check_claim_order(int n) {
  if (n < 0) throw InvalidArgument("claim order n must be non-negative");
}

// Σ_{k=0}^{n} C(n,k) (-1)^k / (k + shift).
inline Rational alternating_reciprocal_sum(int n, const Rational& shift) {
  Rational sum = 0;
  for (int k = 0; k <= n; ++k) {
    Rational term = Rational(binomial(n, k)) / (shift + k);
    if (k % 2 == 0) {
      sum += term;
    } else {
      sum -= term;
    }
  }
  return sum;
}

// n! / Π_{k=0}^{n} (shift + k).
inline Rational factorial_over_rising(int n, const Rational& shift) {
  Rational denom = 1;
  for (int k = 0; k <= n; ++k) denom *= shift + k;
  return Rational(factorial(static_cast<unsigned long>(n))) / denom;
}

}  // namespace detail

// Σ C(n,k) (-1)^k against [n = 0].
inline IdentityCheck claim1(int n) {
  detail::check_claim_order(n);
  Integer sum = 0;
  for (int k = 0; k <= n; ++k) {
    if (k % 2 == 0) {
      sum += binomial(n, k);
    } else {
      sum -= binomial(n, k);
    }
  }
  return {Rational(sum), Rational(n == 0 ? 1 : 0)};
}

// Σ C(n,k) (-1)^k / (k+1) against 1/(n+1).
inline IdentityCheck claim2a(int n) {
  detail::check_claim_order(n);
  return {detail::alternating_reciprocal_sum(n, 1), Rational(1, n + 1)};
}

// Σ C(n,k) (-1)^k / (k+x) against n!/Π(x+k), for x > 0.
inline IdentityCheck claim2b(int n, const Rational& x) {
  detail::check_claim_order(n);
  if (x <= 0) throw InvalidArgument("claim 2(b) needs x > 0, got " + to_string(x));
  return {detail::alternating_reciprocal_sum(n, x),
          detail::factorial_over_rising(n, x)};
}

// Σ C(n,k) (-1)^k / (k+1+x) against n!/Π(1+x+k), for x > -1.
inline IdentityCheck claim2c(int n, const Rational& x) {
  detail::check_claim_order(n);
  if (x <= -1) {
    throw InvalidArgument("claim 2(c) needs x > -1, got " + to_string(x));
  }
  return {detail::alternating_reciprocal_sum(n, x + 1),
          detail::factorial_over_rising(n, x + 1)};
}

namespace detail {

inline void check_separating_players(int n, int i, int j) {
  if (n < 2) {
    throw GuardError("a separating game needs at least two players, got n = " +
                     std::to_string(n));
  }
  if (n > kMaxSeparatingPlayers) {
    throw GuardError("separating game construction: n = " + std::to_string(n) +
                     " exceeds the guard of " +
                     std::to_string(kMaxSeparatingPlayers) + " players");
  }
  check_player(n, i);
  check_player(n, j);
  if (i == j) throw InvalidArgument("players i and j must differ");
}

inline void check_avoids(const Coalition& c, int n, int i, int j,
                         const char* name) {
  if (c.n() != n) {
    throw InvalidArgument(std::string(name) + ": player-count mismatch");
  }
  if (c.mask() & (Coalition::bit(i) | Coalition::bit(j))) {
    throw InvalidArgument(std::string(name) + " = " + to_string(c) +
                          " must avoid players " + std::to_string(i) +
                          " and " + std::to_string(j));
  }
}

}  // namespace detail

// Unanimity coordinates of v_X: λ_T = M^{-1}_{X, T\{i,j}} for every
// T ⊇ {i, j}, zero otherwise. The inverse is taken over the ground set
// G = N \ {i, j} (m = n - 2); subsets of G are re-indexed by deleting bits
// i-1 and j-1 and compacting the remaining bits in order (compress_mask).
inline UnanimityCoordinates separating_coordinates(int n, int i, int j,
                                                   const Coalition& x) {
  detail::check_separating_players(n, i, j);
  detail::check_avoids(x, n, i, j, "X");
  const Coalition::Mask pair = Coalition::bit(i) | Coalition::bit(j);
  const Coalition::Mask ground = Coalition::full_mask(n) & ~pair;
  const int m = n - 2;
  const Coalition::Mask row = compress_mask(x.mask(), ground);
  std::vector<Rational> coeffs(Coalition::table_size(n));
  for (Coalition::Mask r = 0; r < (Coalition::Mask{1} << m); ++r) {
    coeffs[expand_mask(r, ground) | pair] = lemma_inverse_entry(m, row, r);
  }
  return UnanimityCoordinates(n, std::move(coeffs));
}

// v_X = Σ_{T ⊇ {i,j}} λ_{T,X} u_T. Players i and j are equivalent in v_X.
inline CoalitionalGame separating_game(int n, int i, int j, const Coalition& x) {
  return from_unanimity_coordinates(separating_coordinates(n, i, j, x));
}

// Σ_T λ_{T,X} / (1 + |(T \ {i,j}) \ S|), which equals 1 if S = X and 0
// otherwise.
inline Rational selector_identity_check(int n, int i, int j,
                                        const Coalition& x,
                                        const Coalition& s) {
  const auto coords = separating_coordinates(n, i, j, x);
  detail::check_avoids(s, n, i, j, "S");
  const Coalition::Mask pair = Coalition::bit(i) | Coalition::bit(j);
  Rational sum = 0;
  for (Coalition::Mask t = 0; t <= Coalition::full_mask(n); ++t) {
    if ((t & pair) != pair || coords[t] == 0) continue;
    sum += coords[t] / (1 + std::popcount((t & ~pair) & ~s.mask()));
  }
  return sum;
}

// φ_i^p(u_T) split by the situations in which i is pivotal:
//   first   i cooperates, T ⊆ S and i is the last member of T called
//   second  i and j both refuse and i is the first refuser in T called
//   third   i refuses, j cooperates, i is the first refuser in T called
struct PivotTerms {
  Rational first;
  Rational second;
  Rational third;
  Rational total() const { return first + second + third; }
};

inline PivotTerms unanimity_pivot_decomposition(int n, const Coalition& t,
                                                int i, int j,
                                                const CoalitionDistribution& p) {
  check_player_count(n);
  if (t.n() != n || p.n() != n) throw InvalidArgument("player-count mismatch");
  check_player(n, i);
  check_player(n, j);
  if (i == j) throw InvalidArgument("players i and j must differ");
  if (!t.contains(i) || !t.contains(j)) {
    throw InvalidArgument("carrier " + to_string(t) + " must contain players " +
                          std::to_string(i) + " and " + std::to_string(j));
  }
  const Coalition::Mask tm = t.mask();
  const Coalition::Mask bi = Coalition::bit(i);
  const Coalition::Mask bj = Coalition::bit(j);
  PivotTerms out;
  for (Coalition::Mask s = 0; s <= Coalition::full_mask(n); ++s) {
    if ((s & tm) == tm && p[s] != 0) out.first += p[s] / t.size();
    if ((s & (bi | bj)) != 0) continue;
    const int missing = std::popcount(tm & ~s);
    if (p[s] != 0) out.second += p[s] / missing;
    if (p[s | bj] != 0) out.third += p[s | bj] / (missing - 1);
  }
  return out;
}

// A game on which φ^p is not symmetric although i and j are equivalent, so
// φ^p(game) != φ(game).
struct NonExchangeabilityWitness {
  CoalitionalGame game;
  ExchangeabilityViolation violation;
  PowerVector rollcall_value;
  PowerVector shapley_value;
};

// Empty iff p is exchangeable. Otherwise builds v_X from the first
// violation (X, i, j) and re-checks equivalence and asymmetry exactly.
inline std::optional<NonExchangeabilityWitness> witness_non_exchangeability(
    const CoalitionDistribution& p) {
  const int n = p.n();
  if (n < 2) {
    throw GuardError("a non-exchangeability witness needs at least two "
                     "players, got n = " + std::to_string(n));
  }
  if (n > kMaxSeparatingPlayers) {
    throw GuardError("witness construction: n = " + std::to_string(n) +
                     " exceeds the guard of " +
                     std::to_string(kMaxSeparatingPlayers) + " players");
  }
  const auto violation = exchangeability_violation(p);
  if (!violation) return std::nullopt;
  const auto& [x, i, j] = *violation;
  CoalitionalGame game = separating_game(n, i, j, x);
  PowerVector phi_p = rollcall_value_exact(game, p);
  if (!are_equivalent(game, i, j) || phi_p(i) == phi_p(j)) {
    throw std::logic_error("separating game failed to separate players " +
                           std::to_string(i) + " and " + std::to_string(j));
  }
  PowerVector phi = shapley_by_coalitions(game);
  return NonExchangeabilityWitness{std::move(game), *violation,
                                   std::move(phi_p), std::move(phi)};
}

}  // namespace rollcall

#endif  // ROLLCALL_CHARACTERIZATION_HPP
