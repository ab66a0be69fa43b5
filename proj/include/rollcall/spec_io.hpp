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

// JSON file formats for games and distributions. Rationals are written as
// strings "p/q" or "p"; JSON integers are accepted too, floats never.
// Player ids are 1-based.
//
//   game:  {"kind": "weighted", "quota": "3", "weights": ["2", "1", "1"]}
//          {"kind": "unanimity", "n": 3, "carrier": [1, 2]}
//          {"kind": "explicit", "n": 2, "values": ["0", "0", "0", "1"]}
//   dist:  {"kind": "uniform", "n": 3}
//          {"kind": "point", "n": 2, "coalition": [1]}
//          {"kind": "independent", "x": ["1/2", "1/3"]}
//          {"kind": "size", "q": ["1/4", "1/2", "1/4"]}
//          {"kind": "explicit", "n": 2, "p": ["1/4", "1/4", "1/4", "1/4"]}
//
// Explicit tables list values in coalition-mask order.

#ifndef ROLLCALL_SPEC_IO_HPP
#define ROLLCALL_SPEC_IO_HPP

#include <fstream>
#include <optional>
#include <span>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "rollcall/coalition.hpp"
#include "rollcall/distributions.hpp"
#include "rollcall/errors.hpp"
#include "rollcall/games.hpp"
#include "rollcall/rational.hpp"

namespace rollcall::io {

using Json = nlohmann::ordered_json;

namespace detail {

inline ParseError at(const std::string& where, const std::string& what) {
  return ParseError(where + ": " + what);
}

inline const Json& field(const Json& obj, const std::string& key,
                         const std::string& where) {
  if (!obj.is_object()) throw at(where, "expected an object");
  auto it = obj.find(key);
  if (it == obj.end()) throw at(where, "missing field '" + key + "'");
  return *it;
}

inline Rational rational(const Json& value, const std::string& where) {
  if (value.is_string()) {
    try {
      return parse_rational(value.get<std::string>());
    } catch (const ParseError& e) {
      throw at(where, e.what());
    }
  }
  if (value.is_number_integer()) {
    return parse_rational(value.dump());
  }
  throw at(where, "expected a rational string such as \"2/3\", got " +
                      value.dump());
}

inline std::vector<Rational> rationals(const Json& obj, const std::string& key,
                                       const std::string& where) {
  const Json& arr = field(obj, key, where);
  if (!arr.is_array()) throw at(where + "." + key, "expected an array");
  std::vector<Rational> out;
  for (std::size_t k = 0; k < arr.size(); ++k) {
    out.push_back(rational(arr[k], where + "." + key + "[" +
                                       std::to_string(k) + "]"));
  }
  return out;
}

inline int integer(const Json& obj, const std::string& key,
                   const std::string& where) {
  const Json& value = field(obj, key, where);
  if (!value.is_number_integer()) {
    throw at(where + "." + key, "expected an integer, got " + value.dump());
  }
  const auto v = value.get<long long>();
  if (v < -1000000 || v > 1000000) throw at(where + "." + key, "out of range");
  return static_cast<int>(v);
}

inline Coalition players(const Json& obj, const std::string& key, int n,
                         const std::string& where) {
  const Json& arr = field(obj, key, where);
  if (!arr.is_array()) throw at(where + "." + key, "expected an array");
  std::vector<int> ids;
  for (std::size_t k = 0; k < arr.size(); ++k) {
    const std::string pos = where + "." + key + "[" + std::to_string(k) + "]";
    if (!arr[k].is_number_integer()) throw at(pos, "expected a player id");
    const auto id = arr[k].get<long long>();
    if (id < 1 || id > n) {
      throw at(pos, "player " + arr[k].dump() + " out of range 1.." +
                        std::to_string(n));
    }
    ids.push_back(static_cast<int>(id));
  }
  return Coalition::of(n, ids);
}

inline std::string kind(const Json& obj, const std::string& where) {
  const Json& k = field(obj, "kind", where);
  if (!k.is_string()) throw at(where + ".kind", "expected a string");
  return k.get<std::string>();
}

// Constructor validation failures become positioned parse errors; size
// guards keep their own type.
template <typename F>
auto validated(const std::string& where, F&& build) {
  try {
    return build();
  } catch (const InvalidArgument& e) {
    throw at(where, e.what());
  }
}

}  // namespace detail

inline Json parse_json(const std::string& text, const std::string& source) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw ParseError(source + ": " + e.what());
  }
}

inline Json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(path + ": cannot open file");
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_json(buffer.str(), path);
}

inline CoalitionalGame parse_game(const Json& spec,
                                  const std::string& where = "game") {
  const std::string k = detail::kind(spec, where);
  if (k == "weighted") {
    Rational quota = detail::rational(detail::field(spec, "quota", where),
                                      where + ".quota");
    auto weights = detail::rationals(spec, "weights", where);
    return detail::validated(where, [&] { return weighted_game(quota, weights); });
  }
  if (k == "unanimity") {
    const int n = detail::integer(spec, "n", where);
    return detail::validated(where, [&] {
      check_player_count(n);
      return unanimity_game(n, detail::players(spec, "carrier", n, where));
    });
  }
  if (k == "explicit") {
    const int n = detail::integer(spec, "n", where);
    auto values = detail::rationals(spec, "values", where);
    return detail::validated(
        where, [&] { return CoalitionalGame(n, std::move(values)); });
  }
  throw detail::at(where + ".kind", "unknown game kind '" + k + "'");
}

// A parsed distribution, plus the per-player probabilities when it was given
// in product form (lets samplers flip coins instead of walking the table).
struct LoadedDistribution {
  CoalitionDistribution distribution;
  std::optional<std::vector<Rational>> independent;
};

inline LoadedDistribution parse_distribution(
    const Json& spec, const std::string& where = "distribution") {
  const std::string k = detail::kind(spec, where);
  if (k == "uniform") {
    const int n = detail::integer(spec, "n", where);
    return {detail::validated(where, [&] { return uniform_distribution(n); }),
            std::nullopt};
  }
  if (k == "point") {
    const int n = detail::integer(spec, "n", where);
    return {detail::validated(where,
                              [&] {
                                check_player_count(n);
                                return point_mass(
                                    n, detail::players(spec, "coalition", n,
                                                       where));
                              }),
            std::nullopt};
  }
  if (k == "independent") {
    auto x = detail::rationals(spec, "x", where);
    return {detail::validated(where,
                              [&] { return independent_distribution(x); }),
            x};
  }
  if (k == "size") {
    auto q = detail::rationals(spec, "q", where);
    return {detail::validated(where, [&] { return from_size_profile(q); }),
            std::nullopt};
  }
  if (k == "explicit") {
    const int n = detail::integer(spec, "n", where);
    auto p = detail::rationals(spec, "p", where);
    return {detail::validated(
                where, [&] { return explicit_distribution(n, std::move(p)); }),
            std::nullopt};
  }
  throw detail::at(where + ".kind", "unknown distribution kind '" + k + "'");
}

inline Json rational_array(std::span<const Rational> values) {
  Json arr = Json::array();
  for (const auto& v : values) arr.push_back(to_string(v));
  return arr;
}

// Serializes any game as an explicit table; parse_game inverts it.
inline Json game_to_json(const CoalitionalGame& game) {
  Json out;
  out["kind"] = "explicit";
  out["n"] = game.n();
  out["values"] = rational_array(game.values());
  return out;
}

}  // namespace rollcall::io

#endif  // ROLLCALL_SPEC_IO_HPP
