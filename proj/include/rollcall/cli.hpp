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

// Command-line front end. `run` holds everything but process setup so the
// commands can be driven in-process by tests.
//
// Exit codes: 0 success / affirmative, 1 negative finding, 2 parse or usage
// error, 3 guard or precondition violation, 4 internal error.

#ifndef ROLLCALL_CLI_HPP
#define ROLLCALL_CLI_HPP

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <exception>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "rollcall/characterization.hpp"
#include "rollcall/coalition.hpp"
#include "rollcall/distributions.hpp"
#include "rollcall/errors.hpp"
#include "rollcall/games.hpp"
#include "rollcall/rational.hpp"
#include "rollcall/roll_call.hpp"
#include "rollcall/shapley.hpp"
#include "rollcall/spec_io.hpp"

namespace rollcall::cli {

enum ExitCode : int {
  kOk = 0,
  kNegative = 1,
  kParseError = 2,
  kGuardError = 3,
  kInternalError = 4,
};

namespace detail {

using io::Json;

// Left-aligned columns separated by two spaces.
inline void print_table(std::ostream& out,
                        const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::size_t> width;
  for (const auto& row : rows) {
    width.resize(std::max(width.size(), row.size()), 0);
    for (std::size_t c = 0; c < row.size(); ++c) {
      width[c] = std::max(width[c], row[c].size());
    }
  }
  for (const auto& row : rows) {
    std::string line;
    for (std::size_t c = 0; c < row.size(); ++c) {
      line += row[c];
      if (c + 1 < row.size()) line += std::string(width[c] - row[c].size() + 2, ' ');
    }
    out << line << '\n';
  }
}

// "1: 2/3, 2: 1/6, 3: 1/6"
inline std::string summary_line(const std::vector<std::string>& values) {
  std::string line;
  for (std::size_t k = 0; k < values.size(); ++k) {
    if (k > 0) line += ", ";
    line += std::to_string(k + 1) + ": " + values[k];
  }
  return line;
}

inline std::string decimal(double x) { return to_decimal_string(Rational(x)); }

inline Json decimal_number(const std::string& text) {
  return Json(std::strtod(text.c_str(), nullptr));
}

inline Json player_array(const Coalition& s) {
  Json arr = Json::array();
  for (int p : s.players()) arr.push_back(p);
  return arr;
}

struct PowerOptions {
  std::string game_file;
  std::string method = "shapley";
  std::string dist_file;
  std::string engine = "exact";
  std::optional<std::uint64_t> samples;
  std::uint64_t seed = 0;
  unsigned threads = 0;
  std::string format = "table";
};

inline int power(const PowerOptions& opt, std::ostream& out,
                 std::ostream& err) {
  if (opt.method == "rollcall" && opt.dist_file.empty()) {
    err << "error: --method rollcall requires --dist\n";
    return kParseError;
  }
  if (opt.method == "shapley" && !opt.dist_file.empty()) {
    err << "error: --dist only applies to --method rollcall\n";
    return kParseError;
  }
  if (opt.engine == "mc" && !opt.samples) {
    err << "error: --engine mc requires --samples\n";
    return kParseError;
  }
  if (opt.engine != "mc" && opt.samples) {
    err << "error: --samples only applies to --engine mc\n";
    return kParseError;
  }

  const CoalitionalGame game = io::parse_game(io::load_json_file(opt.game_file));
  std::optional<io::LoadedDistribution> dist;
  if (!opt.dist_file.empty()) {
    dist = io::parse_distribution(io::load_json_file(opt.dist_file));
    if (dist->distribution.n() != game.n()) {
      throw ParseError("distribution has " +
                       std::to_string(dist->distribution.n()) +
                       " players but the game has " + std::to_string(game.n()));
    }
  }

  Json report;
  report["players"] = game.n();
  report["method"] = opt.method;
  report["engine"] = opt.engine;
  std::vector<std::string> shown;
  std::vector<std::string> decimals;
  std::vector<std::string> errors;

  if (opt.engine == "mc") {
    MonteCarloEstimate est;
    if (!dist) {
      // All players cooperate: plain random-order sampling of the Shapley value.
      est = rollcall_value_monte_carlo(
          game, TableSampler(point_mass(game.n(), Coalition::grand(game.n()))),
          *opt.samples, opt.seed, opt.threads);
    } else if (dist->independent) {
      est = rollcall_value_monte_carlo(game,
                                       IndependentSampler(*dist->independent),
                                       *opt.samples, opt.seed, opt.threads);
    } else {
      est = rollcall_value_monte_carlo(game, TableSampler(dist->distribution),
                                       *opt.samples, opt.seed, opt.threads);
    }
    for (std::size_t k = 0; k < est.estimate.size(); ++k) {
      shown.push_back(decimal(est.estimate[k]));
      errors.push_back(decimal(est.std_error[k]));
    }
    decimals = shown;
    report["samples"] = *opt.samples;
    report["seed"] = opt.seed;
  } else {
    PowerVector phi = PowerVector::zeros(game.n());
    if (!dist) {
      phi = opt.engine == "reference" ? shapley_by_permutations(game)
                                      : shapley_by_coalitions(game);
    } else {
      phi = opt.engine == "reference"
                ? rollcall_value_reference(game, dist->distribution)
                : rollcall_value_exact(game, dist->distribution);
    }
    for (const auto& v : phi.entries()) {
      shown.push_back(to_string(v));
      decimals.push_back(to_decimal_string(v));
    }
  }

  if (opt.format == "json") {
    Json values = Json::array();
    Json values_decimal = Json::array();
    for (std::size_t k = 0; k < shown.size(); ++k) {
      values.push_back(shown[k]);
      values_decimal.push_back(decimal_number(decimals[k]));
    }
    report["values"] = values;
    report["values_decimal"] = values_decimal;
    if (!errors.empty()) {
      Json se = Json::array();
      for (const auto& e : errors) se.push_back(decimal_number(e));
      report["std_error"] = se;
    }
    out << report.dump(2) << '\n';
    return kOk;
  }

  out << summary_line(shown) << "\n\n";
  std::vector<std::vector<std::string>> rows;
  if (errors.empty()) {
    rows.push_back({"player", "value", "decimal"});
    for (std::size_t k = 0; k < shown.size(); ++k) {
      rows.push_back({std::to_string(k + 1), shown[k], decimals[k]});
    }
  } else {
    rows.push_back({"player", "estimate", "std_error"});
    for (std::size_t k = 0; k < shown.size(); ++k) {
      rows.push_back({std::to_string(k + 1), shown[k], errors[k]});
    }
  }
  print_table(out, rows);
  return kOk;
}

inline std::string violation_line(const ExchangeabilityViolation& v,
                                  const CoalitionDistribution& p) {
  return "violation: X=" + to_string(v.x) + " i=" + std::to_string(v.i) +
         " j=" + std::to_string(v.j) +
         " p=" + to_string(p[v.x.mask() | Coalition::bit(v.i)]) + " vs " +
         to_string(p[v.x.mask() | Coalition::bit(v.j)]);
}

inline int check_exchangeable(const std::string& dist_file, std::ostream& out) {
  const auto dist = io::parse_distribution(io::load_json_file(dist_file));
  const auto violation = exchangeability_violation(dist.distribution);
  if (!violation) {
    out << "exchangeable\n";
    return kOk;
  }
  out << violation_line(*violation, dist.distribution) << '\n';
  return kNegative;
}

inline int witness(const std::string& dist_file, const std::string& format,
                   std::ostream& out) {
  const auto dist = io::parse_distribution(io::load_json_file(dist_file));
  const CoalitionDistribution& p = dist.distribution;
  const auto found = witness_non_exchangeability(p);
  if (format == "json") {
    Json report;
    report["exchangeable"] = !found.has_value();
    if (found) {
      const auto& v = found->violation;
      Json viol;
      viol["X"] = player_array(v.x);
      viol["i"] = v.i;
      viol["j"] = v.j;
      viol["p_i"] = to_string(p[v.x.mask() | Coalition::bit(v.i)]);
      viol["p_j"] = to_string(p[v.x.mask() | Coalition::bit(v.j)]);
      report["violation"] = viol;
      report["game"] = io::game_to_json(found->game);
      report["rollcall_value"] = io::rational_array(found->rollcall_value.entries());
      report["shapley_value"] = io::rational_array(found->shapley_value.entries());
    }
    out << report.dump(2) << '\n';
    return found ? kNegative : kOk;
  }
  if (!found) {
    out << "exchangeable; no witness exists\n";
    return kOk;
  }
  const auto& v = found->violation;
  out << violation_line(v, p) << '\n';
  out << "game: " << io::game_to_json(found->game).dump() << '\n';
  out << "players " << v.i << " and " << v.j << " are equivalent in the game\n";
  out << "rollcall value: " << to_string(found->rollcall_value) << '\n';
  out << "shapley value:  " << to_string(found->shapley_value) << '\n';
  return kNegative;
}

inline int verify_lemma_cmd(int m, std::ostream& out) {
  if (m < 0 || m > kMaxLemmaGround) {
    throw GuardError("--m must lie in 0.." + std::to_string(kMaxLemmaGround) +
                     ", got " + std::to_string(m));
  }
  bool all = true;
  auto report = [&](bool ok, const std::string& what) {
    out << (ok ? "PASS " : "FAIL ") << what << '\n';
    all = all && ok;
  };
  const std::size_t dim = std::size_t{1} << m;
  report(verify_lemma(m), "lemma m=" + std::to_string(m) +
                              ": M * M^-1 = I (" + std::to_string(dim) + "x" +
                              std::to_string(dim) + ")");
  const std::vector<Rational> xs_b = {Rational(1, 2), Rational(1), Rational(7, 3)};
  const std::vector<Rational> xs_c = {Rational(-1, 2), Rational(0), Rational(5, 2)};
  bool c1 = true, c2a = true, c2b = true, c2c = true;
  for (int n = 0; n <= m; ++n) {
    c1 = c1 && claim1(n).holds();
    c2a = c2a && claim2a(n).holds();
    for (const auto& x : xs_b) c2b = c2b && claim2b(n, x).holds();
    for (const auto& x : xs_c) c2c = c2c && claim2c(n, x).holds();
  }
  const std::string range = " n=0.." + std::to_string(m);
  report(c1, "claim1" + range);
  report(c2a, "claim2a" + range);
  report(c2b, "claim2b" + range + " x in {1/2, 1, 7/3}");
  report(c2c, "claim2c" + range + " x in {-1/2, 0, 5/2}");
  return all ? kOk : kNegative;
}

}  // namespace detail

inline int run(std::span<const std::string> args, std::ostream& out,
               std::ostream& err) {
  CLI::App app{"Shapley and roll-call values of coalitional games", "rollcall"};
  app.require_subcommand(1);

  detail::PowerOptions power;
  auto* power_cmd = app.add_subcommand("power", "Per-player values of a game");
  power_cmd->add_option("game", power.game_file, "Game file (JSON)")->required();
  power_cmd->add_option("--method", power.method, "shapley or rollcall")
      ->check(CLI::IsMember({"shapley", "rollcall"}));
  power_cmd->add_option("--dist", power.dist_file,
                        "Distribution file (rollcall only)");
  power_cmd->add_option("--engine", power.engine, "reference, exact or mc")
      ->check(CLI::IsMember({"reference", "exact", "mc"}));
  power_cmd->add_option("--samples", power.samples, "Monte Carlo sample count");
  power_cmd->add_option("--seed", power.seed, "Monte Carlo seed");
  power_cmd->add_option("--threads", power.threads,
                        "Monte Carlo worker threads (0 = all cores)");
  power_cmd->add_option("--format", power.format, "json or table")
      ->check(CLI::IsMember({"json", "table"}));

  std::string exch_file;
  auto* exch_cmd = app.add_subcommand("check-exchangeable",
                                      "Test a distribution for exchangeability");
  exch_cmd->add_option("dist", exch_file, "Distribution file (JSON)")->required();

  std::string witness_file;
  std::string witness_format = "table";
  auto* witness_cmd = app.add_subcommand(
      "witness", "Build a game separating the roll-call value from Shapley");
  witness_cmd->add_option("dist", witness_file, "Distribution file (JSON)")
      ->required();
  witness_cmd->add_option("--format", witness_format, "json or table")
      ->check(CLI::IsMember({"json", "table"}));

  int lemma_m = 0;
  auto* lemma_cmd = app.add_subcommand(
      "verify-lemma", "Check the inverse-matrix lemma and binomial identities");
  lemma_cmd->add_option("--m", lemma_m, "Ground set size")->required();

  std::vector<std::string> storage = {"rollcall"};
  storage.insert(storage.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& s : storage) argv.push_back(s.data());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kParseError;
  }

  try {
    if (*power_cmd) return detail::power(power, out, err);
    if (*exch_cmd) return detail::check_exchangeable(exch_file, out);
    if (*witness_cmd) return detail::witness(witness_file, witness_format, out);
    if (*lemma_cmd) return detail::verify_lemma_cmd(lemma_m, out);
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return kParseError;
  } catch (const GuardError& e) {
    err << "limit: " << e.what() << '\n';
    return kGuardError;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kGuardError;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kInternalError;
  }
  return kInternalError;
}

}  // namespace rollcall::cli

#endif  // ROLLCALL_CLI_HPP
