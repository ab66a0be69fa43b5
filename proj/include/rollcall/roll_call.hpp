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

// The generalized roll-call model. Players are called in a uniformly random
// order π; those in the final cooperator set S vote "yes", the rest "no". A
// yes-voter contributes the surplus it adds to the earlier yes-voters, a
// no-voter the surplus it rescinds relative to the earlier no-voters (via
// the dual game). The roll-call value φ^p averages these contributions over
// π uniform and S ~ p.
//
// Three engines compute φ^p:
//   rollcall_value_reference    direct double sum over orders × coalitions
//   rollcall_value_exact        Σ_S p(S) × Shapley values of two subgames
//   rollcall_value_monte_carlo  sampled estimate with standard errors

#ifndef ROLLCALL_ROLL_CALL_HPP
#define ROLLCALL_ROLL_CALL_HPP

#include <algorithm>
#include <atomic>
#include <bit>
#include <cmath>
#include <concepts>
#include <cstddef>
#include <cstdint>
#include <exception>
#include <numeric>
#include <random>
#include <span>
#include <stdexcept>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "rollcall/coalition.hpp"
#include "rollcall/distributions.hpp"
#include "rollcall/errors.hpp"
#include "rollcall/games.hpp"
#include "rollcall/rational.hpp"
#include "rollcall/shapley.hpp"

namespace rollcall {

inline constexpr int kMaxReferencePlayers = 6;
inline constexpr int kMaxExactPlayers = 14;

class RollCall {
 public:
  // order[k] is the (k+1)-th player called.
  RollCall(std::vector<int> order, Coalition cooperators)
      : order_(std::move(order)), cooperators_(cooperators) {
    const int n = cooperators_.n();
    if (static_cast<int>(order_.size()) != n) {
      throw InvalidArgument("roll call order has " +
                            std::to_string(order_.size()) +
                            " entries for n = " + std::to_string(n));
    }
    Coalition::Mask seen = 0;
    for (int p : order_) {
      check_player(n, p);
      if (seen & Coalition::bit(p)) {
        throw InvalidArgument("roll call order repeats player " +
                              std::to_string(p));
      }
      seen |= Coalition::bit(p);
    }
  }

  int n() const { return cooperators_.n(); }
  std::span<const int> order() const { return order_; }
  const Coalition& cooperators() const { return cooperators_; }

 private:
  std::vector<int> order_;
  Coalition cooperators_;
};

// P_i^π: players called before i.
inline Coalition predecessors(const RollCall& r, int player) {
  check_player(r.n(), player);
  Coalition::Mask before = 0;
  for (int p : r.order()) {
    if (p == player) break;
    before |= Coalition::bit(p);
  }
  return Coalition(r.n(), before);
}

// Cooperators called before i.
inline Coalition yes_predecessors(const RollCall& r, int player) {
  return Coalition(r.n(),
                   predecessors(r, player).mask() & r.cooperators().mask());
}

// Non-cooperators called before i.
inline Coalition no_predecessors(const RollCall& r, int player) {
  return Coalition(r.n(),
                   predecessors(r, player).mask() & ~r.cooperators().mask());
}

namespace detail {

// Contribution of `player` given the yes/no predecessor masks. The no-voter
// branch uses v*(A ∪ {i}) - v*(A) = v(N \ A) - v(N \ (A ∪ {i})).
inline Rational contribution(const CoalitionalGame& v, bool cooperates,
                             Coalition::Mask yes_before,
                             Coalition::Mask no_before, Coalition::Mask bit) {
  if (cooperates) return v[yes_before | bit] - v[yes_before];
  const Coalition::Mask full = v.grand_mask();
  return v[full & ~no_before] - v[full & ~(no_before | bit)];
}

inline void check_dimensions(const CoalitionalGame& v, int n) {
  if (v.n() != n) {
    throw InvalidArgument("player-count mismatch: game has " +
                          std::to_string(v.n()) + " players, other input " +
                          std::to_string(n));
  }
}

}  // namespace detail

inline Rational marginal_contribution(const CoalitionalGame& v,
                                      const RollCall& r, int player) {
  detail::check_dimensions(v, r.n());
  check_player(r.n(), player);
  return detail::contribution(v, r.cooperators().contains(player),
                              yes_predecessors(r, player).mask(),
                              no_predecessors(r, player).mask(),
                              Coalition::bit(player));
}

// In a simple game the player's vote seals an outcome that was still open.
inline bool is_pivotal(const CoalitionalGame& v, const RollCall& r,
                       int player) {
  if (!is_simple(v)) {
    throw InvalidArgument("pivotality is defined for simple games only");
  }
  return marginal_contribution(v, r, player) == 1;
}

// (1/n!) Σ_π Σ_S p(S) M(v, (π, S), i). Every enumerated roll call is checked
// against Σ_i M = v(N).
inline PowerVector rollcall_value_reference(const CoalitionalGame& v,
                                            const CoalitionDistribution& p,
                                            Guard guard = Guard::kEnforce) {
  const int n = p.n();
  detail::check_dimensions(v, n);
  if (guard == Guard::kEnforce && n > kMaxReferencePlayers) {
    throw GuardError("rollcall_value_reference: n = " + std::to_string(n) +
                     " exceeds the enumeration guard of " +
                     std::to_string(kMaxReferencePlayers) + " players");
  }
  const auto un = static_cast<std::size_t>(n);
  std::vector<Rational> phi(un);
  std::vector<Rational> over_orders(un);
  std::vector<int> order(un);
  Rational total;
  Rational m;
  for (Coalition::Mask s = 0; s <= v.grand_mask(); ++s) {
    std::fill(over_orders.begin(), over_orders.end(), Rational(0));
    std::iota(order.begin(), order.end(), 1);
    do {
      Coalition::Mask yes = 0;
      Coalition::Mask no = 0;
      total = 0;
      for (int player : order) {
        const Coalition::Mask b = Coalition::bit(player);
        const bool cooperates = (s & b) != 0;
        m = detail::contribution(v, cooperates, yes, no, b);
        over_orders[static_cast<std::size_t>(player - 1)] += m;
        total += m;
        (cooperates ? yes : no) |= b;
      }
      if (total != v.grand_value()) {
        throw std::logic_error("roll call contributions do not telescope to "
                               "v(N)");
      }
    } while (std::next_permutation(order.begin(), order.end()));
    if (p[s] == 0) continue;
    for (std::size_t i = 0; i < un; ++i) phi[i] += p[s] * over_orders[i];
  }
  const Rational orders(factorial(un));
  for (auto& e : phi) e /= orders;
  return PowerVector(std::move(phi));
}

namespace detail {

// v restricted to the players in `keep`, re-indexed densely.
inline CoalitionalGame subgame(const CoalitionalGame& v,
                               Coalition::Mask keep) {
  const int size = std::popcount(keep);
  std::vector<Rational> values(Coalition::table_size(size));
  for (Coalition::Mask a = 0; a < values.size(); ++a) {
    values[a] = v[expand_mask(a, keep)];
  }
  return CoalitionalGame(size, std::move(values));
}

// v* restricted to `keep`: A ↦ v(N) - v(N \ A).
inline CoalitionalGame dual_subgame(const CoalitionalGame& v,
                                    Coalition::Mask keep) {
  const int size = std::popcount(keep);
  const Coalition::Mask full = v.grand_mask();
  std::vector<Rational> values(Coalition::table_size(size));
  for (Coalition::Mask a = 0; a < values.size(); ++a) {
    values[a] = v.grand_value() - v[full & ~expand_mask(a, keep)];
  }
  return CoalitionalGame(size, std::move(values));
}

}  // namespace detail

// For i ∈ S only the cooperating predecessors matter, and under a uniform
// order they are distributed exactly as the predecessor set of i in the
// subgame on S; symmetrically for i ∉ S with the dual game on N \ S. Hence
//   φ_i^p(v) = Σ_{S∋i} p(S) φ_i(v|S) + Σ_{S∌i} p(S) φ_i(v*|N\S).
// Work is Σ_S |S| 2^|S| ≈ n 3^n.
inline PowerVector rollcall_value_exact(const CoalitionalGame& v,
                                        const CoalitionDistribution& p,
                                        Guard guard = Guard::kEnforce) {
  const int n = p.n();
  detail::check_dimensions(v, n);
  if (guard == Guard::kEnforce && n > kMaxExactPlayers) {
    throw GuardError("rollcall_value_exact: n = " + std::to_string(n) +
                     " exceeds the guard of " +
                     std::to_string(kMaxExactPlayers) + " players");
  }
  const Coalition::Mask full = v.grand_mask();
  std::vector<Rational> phi(static_cast<std::size_t>(n));
  for (Coalition::Mask s = 0; s <= full; ++s) {
    if (p[s] == 0) continue;
    Rational total = 0;
    auto scatter = [&](const PowerVector& local, Coalition::Mask players) {
      int k = 1;
      for (Coalition::Mask m = players; m != 0; m &= m - 1, ++k) {
        const auto idx = static_cast<std::size_t>(std::countr_zero(m));
        phi[idx] += p[s] * local(k);
        total += local(k);
      }
    };
    if (s != 0) scatter(shapley_by_coalitions(detail::subgame(v, s)), s);
    if (s != full) {
      scatter(shapley_by_coalitions(detail::dual_subgame(v, full & ~s)),
              full & ~s);
    }
    // Averaged over orders, contributions still telescope to v(N).
    if (total != v.grand_value()) {
      throw std::logic_error("subgame values do not sum to v(N)");
    }
  }
  return PowerVector(std::move(phi));
}

// ---------------------------------------------------------------------------
// Monte Carlo

// Draws cooperator sets (as masks) from a distribution over 2^N.
template <typename S>
concept CoalitionSampler =
    requires(const S& sampler, std::mt19937_64& rng) {
      { sampler.n() } -> std::convertible_to<int>;
      { sampler(rng) } -> std::same_as<Coalition::Mask>;
    };

namespace detail {

// Uniform double in [0, 1) from the top 53 bits.
inline double unit_uniform(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

// Uniform integer in [0, bound) by rejection.
inline std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound) {
  const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % bound);
  std::uint64_t x;
  do {
    x = rng();
  } while (x >= limit);
  return x % bound;
}

}  // namespace detail

// Inverse-CDF sampling over an explicit mass table.
class TableSampler {
 public:
  explicit TableSampler(const CoalitionDistribution& p)
      : n_(p.n()), cdf_(p.masses().size()) {
    double acc = 0.0;
    std::size_t last_positive = 0;
    for (std::size_t s = 0; s < cdf_.size(); ++s) {
      acc += p.masses()[s].get_d();
      cdf_[s] = acc;
      if (p.masses()[s] != 0) last_positive = s;
    }
    for (std::size_t s = last_positive; s < cdf_.size(); ++s) cdf_[s] = 1.0;
  }

  int n() const { return n_; }
  Coalition::Mask operator()(std::mt19937_64& rng) const {
    const double u = detail::unit_uniform(rng);
    const auto it = std::upper_bound(cdf_.begin(), cdf_.end(), u);
    return static_cast<Coalition::Mask>(it - cdf_.begin());
  }

 private:
  int n_;
  std::vector<double> cdf_;
};

// Independent votes: player i cooperates with probability x_i.
class IndependentSampler {
 public:
  explicit IndependentSampler(std::span<const Rational> x) {
    check_player_count(static_cast<int>(x.size()));
    for (const auto& xi : x) {
      if (xi < 0 || xi > 1) {
        throw InvalidArgument("cooperation probability outside [0, 1]");
      }
      x_.push_back(xi.get_d());
    }
  }

  int n() const { return static_cast<int>(x_.size()); }
  Coalition::Mask operator()(std::mt19937_64& rng) const {
    Coalition::Mask s = 0;
    for (std::size_t k = 0; k < x_.size(); ++k) {
      if (detail::unit_uniform(rng) < x_[k]) s |= Coalition::Mask{1} << k;
    }
    return s;
  }

 private:
  std::vector<double> x_;
};

struct MonteCarloEstimate {
  std::vector<double> estimate;
  // Standard error of the mean (sample variance with n-1 denominator);
  // reported as 0 when only one sample was drawn.
  std::vector<double> std_error;
  std::uint64_t samples = 0;
};

// Samples per independently seeded substream.
inline constexpr std::uint64_t kMonteCarloChunk = 4096;

// Estimates φ^p from `samples` roll calls. Samples are split into chunks of
// kMonteCarloChunk, chunk c drawing from mt19937_64 seeded by
// seed_seq{seed, c}; chunk sums are combined in chunk order, so the result
// depends only on (game, sampler, samples, seed) and not on `threads`
// (0 = hardware concurrency).
template <CoalitionSampler Sampler>
MonteCarloEstimate rollcall_value_monte_carlo(const CoalitionalGame& v,
                                              const Sampler& sampler,
                                              std::uint64_t samples,
                                              std::uint64_t seed,
                                              unsigned threads = 0) {
  const int n = sampler.n();
  detail::check_dimensions(v, n);
  if (samples == 0) {
    throw GuardError("Monte Carlo estimation needs at least one sample");
  }
  const auto un = static_cast<std::size_t>(n);
  const Coalition::Mask full = v.grand_mask();
  std::vector<double> table(v.values().size());
  for (std::size_t s = 0; s < table.size(); ++s) table[s] = v.values()[s].get_d();
  const double grand = table[full];
  const double tolerance = 1e-9 * (1.0 + std::abs(grand));

  const std::uint64_t chunks = (samples + kMonteCarloChunk - 1) / kMonteCarloChunk;
  // Per chunk: n sums followed by n sums of squares.
  std::vector<double> partial(chunks * 2 * un, 0.0);

  auto run_chunk = [&](std::uint64_t c) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed),
                      static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(c),
                      static_cast<std::uint32_t>(c >> 32)};
    std::mt19937_64 rng(seq);
    const std::uint64_t begin = c * kMonteCarloChunk;
    const std::uint64_t end = std::min(samples, begin + kMonteCarloChunk);
    double* sum = &partial[c * 2 * un];
    double* sum_sq = sum + un;
    std::vector<int> order(un);
    for (std::uint64_t k = begin; k < end; ++k) {
      const Coalition::Mask s = sampler(rng);
      std::iota(order.begin(), order.end(), 0);
      for (std::size_t a = un; a > 1; --a) {
        std::swap(order[a - 1], order[detail::uniform_below(rng, a)]);
      }
      Coalition::Mask yes = 0;
      Coalition::Mask no = 0;
      double total = 0.0;
      for (int idx : order) {
        const Coalition::Mask b = Coalition::Mask{1} << idx;
        double m;
        if (s & b) {
          m = table[yes | b] - table[yes];
          yes |= b;
        } else {
          m = table[full & ~no] - table[full & ~(no | b)];
          no |= b;
        }
        sum[idx] += m;
        sum_sq[idx] += m * m;
        total += m;
      }
      if (std::abs(total - grand) > tolerance) {
        throw std::logic_error("sampled roll call does not telescope to v(N)");
      }
    }
  };

  unsigned workers = threads == 0 ? std::thread::hardware_concurrency() : threads;
  workers = static_cast<unsigned>(
      std::clamp<std::uint64_t>(workers, 1, chunks));
  if (workers == 1) {
    for (std::uint64_t c = 0; c < chunks; ++c) run_chunk(c);
  } else {
    std::atomic<std::uint64_t> next{0};
    std::vector<std::exception_ptr> errors(workers);
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w) {
      pool.emplace_back([&, w] {
        try {
          for (std::uint64_t c = next++; c < chunks; c = next++) run_chunk(c);
        } catch (...) {
          errors[w] = std::current_exception();
        }
      });
    }
    for (auto& t : pool) t.join();
    for (auto& e : errors) {
      if (e) std::rethrow_exception(e);
    }
  }

  MonteCarloEstimate out;
  out.samples = samples;
  out.estimate.assign(un, 0.0);
  out.std_error.assign(un, 0.0);
  std::vector<double> sum_sq(un, 0.0);
  for (std::uint64_t c = 0; c < chunks; ++c) {
    for (std::size_t i = 0; i < un; ++i) {
      out.estimate[i] += partial[c * 2 * un + i];
      sum_sq[i] += partial[c * 2 * un + un + i];
    }
  }
  const double count = static_cast<double>(samples);
  for (std::size_t i = 0; i < un; ++i) {
    const double sum = out.estimate[i];
    out.estimate[i] = sum / count;
    if (samples > 1) {
      const double var =
          std::max(0.0, (sum_sq[i] - sum * sum / count) / (count - 1.0));
      out.std_error[i] = std::sqrt(var / count);
    }
  }
  return out;
}

}  // namespace rollcall

#endif  // ROLLCALL_ROLL_CALL_HPP
