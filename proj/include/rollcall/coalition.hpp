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

#ifndef ROLLCALL_COALITION_HPP
#define ROLLCALL_COALITION_HPP

#include <bit>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "rollcall/errors.hpp"

namespace rollcall {

// Largest player count for which explicit 2^n tables are built.
inline constexpr int kMaxPlayers = 24;

inline void check_player_count(int n) {
  if (n < 1) {
    throw InvalidArgument("player count must be at least 1, got " +
                          std::to_string(n));
  }
  if (n > kMaxPlayers) {
    throw GuardError("player count " + std::to_string(n) +
                     " exceeds the table limit of " +
                     std::to_string(kMaxPlayers));
  }
}

// Players are numbered 1..n.
inline void check_player(int n, int player) {
  if (player < 1 || player > n) {
    throw InvalidArgument("player " + std::to_string(player) +
                          " out of range 1.." + std::to_string(n));
  }
}

// A subset of N = {1, ..., n}. Bit (i-1) of the mask is set iff player i
// belongs to the coalition; every table in the library is indexed by this
// mask.
class Coalition {
 public:
  using Mask = std::uint32_t;

  Coalition(int n, Mask mask) : n_(n), mask_(mask) {
    check_player_count(n);
    if (mask >= table_size(n)) {
      throw InvalidArgument("coalition mask " + std::to_string(mask) +
                            " has players beyond n = " + std::to_string(n));
    }
  }

  static Coalition empty(int n) { return Coalition(n, 0); }
  static Coalition grand(int n) { return Coalition(n, full_mask(n)); }

  static Coalition of(int n, std::span<const int> players) {
    check_player_count(n);
    Mask mask = 0;
    for (int p : players) {
      check_player(n, p);
      mask |= bit(p);
    }
    return Coalition(n, mask);
  }
  static Coalition of(int n, std::initializer_list<int> players) {
    return of(n, std::span<const int>(players.begin(), players.size()));
  }

  static constexpr Mask bit(int player) { return Mask{1} << (player - 1); }
  static constexpr Mask full_mask(int n) {
    return n >= 32 ? ~Mask{0} : (Mask{1} << n) - 1;
  }
  static constexpr std::size_t table_size(int n) { return std::size_t{1} << n; }

  int n() const { return n_; }
  Mask mask() const { return mask_; }
  int size() const { return std::popcount(mask_); }
  bool is_empty() const { return mask_ == 0; }

  bool contains(int player) const {
    check_player(n_, player);
    return (mask_ & bit(player)) != 0;
  }
  bool is_subset_of(const Coalition& other) const {
    return (mask_ & ~other.mask_) == 0;
  }

  Coalition with(int player) const {
    check_player(n_, player);
    return Coalition(n_, mask_ | bit(player));
  }
  Coalition without(int player) const {
    check_player(n_, player);
    return Coalition(n_, mask_ & ~bit(player));
  }
  Coalition complement() const { return Coalition(n_, full_mask(n_) & ~mask_); }

  // Ascending 1-based player ids.
  std::vector<int> players() const {
    std::vector<int> out;
    for (Mask m = mask_; m != 0; m &= m - 1) {
      out.push_back(std::countr_zero(m) + 1);
    }
    return out;
  }

  friend bool operator==(const Coalition&, const Coalition&) = default;

 private:
  int n_;
  Mask mask_;
};

// "∅" or "{1,3}".
inline std::string to_string(const Coalition& s) {
  if (s.is_empty()) return "∅";
  std::string out = "{";
  bool first = true;
  for (int p : s.players()) {
    if (!first) out += ',';
    out += std::to_string(p);
    first = false;
  }
  return out + "}";
}

// Packs the bits of `mask` selected by `keep` into the low bits, preserving
// their order (bit-gather). Used to re-index a subgame on player set `keep`
// as a dense game on |keep| players.
inline Coalition::Mask compress_mask(Coalition::Mask mask,
                                     Coalition::Mask keep) {
  Coalition::Mask out = 0;
  int k = 0;
  for (Coalition::Mask m = keep; m != 0; m &= m - 1, ++k) {
    if (mask & (m & -m)) out |= Coalition::Mask{1} << k;
  }
  return out;
}

// Inverse of compress_mask: scatters the low popcount(keep) bits of `dense`
// onto the positions of `keep`.
inline Coalition::Mask expand_mask(Coalition::Mask dense,
                                   Coalition::Mask keep) {
  Coalition::Mask out = 0;
  int k = 0;
  for (Coalition::Mask m = keep; m != 0; m &= m - 1, ++k) {
    if (dense & (Coalition::Mask{1} << k)) out |= m & -m;
  }
  return out;
}

}  // namespace rollcall

#endif  // ROLLCALL_COALITION_HPP
