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

// Joint distributions p over 2^N (who cooperates), their constructors and
// the exchangeability test.

#ifndef ROLLCALL_DISTRIBUTIONS_HPP
#define ROLLCALL_DISTRIBUTIONS_HPP

#include <bit>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "rollcall/coalition.hpp"
#include "rollcall/errors.hpp"
#include "rollcall/rational.hpp"

namespace rollcall {

class CoalitionDistribution {
 public:
  // `mass[mask]` is p(S). Requires 2^n non-negative entries summing to 1.
  CoalitionDistribution(int n, std::vector<Rational> mass)
      : n_(n), mass_(std::move(mass)) {
    check_player_count(n);
    if (mass_.size() != Coalition::table_size(n)) {
      throw InvalidArgument("distribution for n = " + std::to_string(n) +
                            " needs " +
                            std::to_string(Coalition::table_size(n)) +
                            " masses, got " + std::to_string(mass_.size()));
    }
    Rational total = 0;
    for (std::size_t s = 0; s < mass_.size(); ++s) {
      if (mass_[s] < 0) {
        throw InvalidArgument("negative mass " + to_string(mass_[s]) +
                              " at index " + std::to_string(s));
      }
      total += mass_[s];
    }
    if (total != 1) {
      throw InvalidArgument("masses sum to " + to_string(total) +
                            ", expected 1");
    }
  }

  int n() const { return n_; }
  const Rational& operator[](Coalition::Mask mask) const { return mass_[mask]; }
  const Rational& operator()(const Coalition& s) const {
    if (s.n() != n_) throw InvalidArgument("player-count mismatch");
    return mass_[s.mask()];
  }
  std::span<const Rational> masses() const { return mass_; }

  friend bool operator==(const CoalitionDistribution&,
                         const CoalitionDistribution&) = default;

 private:
  int n_;
  std::vector<Rational> mass_;
};

inline CoalitionDistribution explicit_distribution(int n,
                                                   std::vector<Rational> mass) {
  return CoalitionDistribution(n, std::move(mass));
}

// p(S) = Π_{i∈S} x_i Π_{i∉S} (1 - x_i).
inline CoalitionDistribution independent_distribution(
    std::span<const Rational> x) {
  const int n = static_cast<int>(x.size());
  check_player_count(n);
  for (std::size_t k = 0; k < x.size(); ++k) {
    if (x[k] < 0 || x[k] > 1) {
      throw InvalidArgument("probability x_" + std::to_string(k + 1) + " = " +
                            to_string(x[k]) + " outside [0, 1]");
    }
  }
  // Grow the table one player at a time.
  std::vector<Rational> mass(Coalition::table_size(n));
  mass[0] = 1;
  for (std::size_t k = 0; k < x.size(); ++k) {
    const std::size_t half = std::size_t{1} << k;
    const Rational no = 1 - x[k];
    for (std::size_t s = 0; s < half; ++s) {
      mass[s | half] = mass[s] * x[k];
      mass[s] *= no;
    }
  }
  return CoalitionDistribution(n, std::move(mass));
}

inline CoalitionDistribution independent_distribution(
    const std::vector<Rational>& x) {
  return independent_distribution(std::span<const Rational>(x));
}

inline CoalitionDistribution uniform_distribution(int n) {
  check_player_count(n);
  const Rational each(1, Integer(1) << static_cast<mp_bitcnt_t>(n));
  return CoalitionDistribution(
      n, std::vector<Rational>(Coalition::table_size(n), each));
}

inline CoalitionDistribution point_mass(int n, const Coalition& s) {
  check_player_count(n);
  if (s.n() != n) throw InvalidArgument("player-count mismatch");
  std::vector<Rational> mass(Coalition::table_size(n));
  mass[s.mask()] = 1;
  return CoalitionDistribution(n, std::move(mass));
}

// Exchangeable family: q_k is the probability of exactly k cooperators,
// spread evenly over the C(n, k) coalitions of that size.
inline CoalitionDistribution from_size_profile(std::span<const Rational> q) {
  const int n = static_cast<int>(q.size()) - 1;
  check_player_count(n);
  Rational total = 0;
  for (std::size_t k = 0; k < q.size(); ++k) {
    if (q[k] < 0) {
      throw InvalidArgument("negative size probability q_" +
                            std::to_string(k) + " = " + to_string(q[k]));
    }
    total += q[k];
  }
  if (total != 1) {
    throw InvalidArgument("size profile sums to " + to_string(total) +
                          ", expected 1");
  }
  std::vector<Rational> per_size(q.size());
  for (std::size_t k = 0; k < q.size(); ++k) {
    per_size[k] = q[k] / Rational(binomial(n, static_cast<long>(k)));
  }
  std::vector<Rational> mass(Coalition::table_size(n));
  for (std::size_t s = 0; s < mass.size(); ++s) {
    mass[s] = per_size[static_cast<std::size_t>(
        std::popcount(static_cast<Coalition::Mask>(s)))];
  }
  return CoalitionDistribution(n, std::move(mass));
}

inline CoalitionDistribution from_size_profile(const std::vector<Rational>& q) {
  return from_size_profile(std::span<const Rational>(q));
}

// p(X ∪ {i}) != p(X ∪ {j}) with X ⊆ N \ {i, j} and i < j.
struct ExchangeabilityViolation {
  Coalition x;
  int i;
  int j;
};

// Scans coalition sizes 1..n-1 in increasing order, then X by ascending mask,
// then i, then j, and returns the first violating triple. Masses are
// constant on every size class iff no single swap changes them, since any
// two equal-size coalitions are joined by a path of single swaps.
inline std::optional<ExchangeabilityViolation> exchangeability_violation(
    const CoalitionDistribution& p) {
  const int n = p.n();
  const Coalition::Mask full = Coalition::full_mask(n);
  for (int size = 1; size < n; ++size) {
    for (Coalition::Mask x = 0; x <= full; ++x) {
      if (std::popcount(x) != size - 1) continue;
      for (int i = 1; i <= n; ++i) {
        const Coalition::Mask bi = Coalition::bit(i);
        if (x & bi) continue;
        for (int j = i + 1; j <= n; ++j) {
          const Coalition::Mask bj = Coalition::bit(j);
          if (x & bj) continue;
          if (p[x | bi] != p[x | bj]) {
            return ExchangeabilityViolation{Coalition(n, x), i, j};
          }
        }
      }
    }
  }
  return std::nullopt;
}

// p(S) depends on |S| only.
inline bool is_exchangeable(const CoalitionDistribution& p) {
  const int n = p.n();
  std::vector<const Rational*> first(static_cast<std::size_t>(n + 1), nullptr);
  for (Coalition::Mask s = 0; s <= Coalition::full_mask(n); ++s) {
    auto& ref = first[static_cast<std::size_t>(std::popcount(s))];
    if (ref == nullptr) {
      ref = &p[s];
    } else if (*ref != p[s]) {
      return false;
    }
  }
  return true;
}

}  // namespace rollcall

#endif  // ROLLCALL_DISTRIBUTIONS_HPP
