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

// Exact rational arithmetic on top of GMP, plus the handful of integer
// combinatorics helpers (factorials, binomials) shared by the algorithms.

#ifndef ROLLCALL_RATIONAL_HPP
#define ROLLCALL_RATIONAL_HPP

#include <gmpxx.h>

#include <cstddef>
#include <string>
#include <string_view>

#include "rollcall/errors.hpp"

namespace rollcall {

using Rational = mpq_class;
using Integer = mpz_class;

inline Integer factorial(unsigned long n) {
  Integer out;
  mpz_fac_ui(out.get_mpz_t(), n);
  return out;
}

// C(a, b), zero whenever b < 0 or b > a.
inline Integer binomial(long a, long b) {
  if (a < 0 || b < 0 || b > a) return 0;
  Integer out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(a),
               static_cast<unsigned long>(b));
  return out;
}

// Accepts "p", "-p", "+p", "p/q" with decimal digits and q > 0. Decimal
// points, exponents and whitespace are rejected.
inline Rational parse_rational(std::string_view text) {
  auto fail = [&](const char* why) -> ParseError {
    return ParseError("not a rational '" + std::string(text) + "': " + why);
  };
  std::size_t pos = 0;
  if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) ++pos;
  const std::size_t num_begin = pos;
  while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9') ++pos;
  if (pos == num_begin) throw fail("expected digits");
  std::string_view num = text.substr(0, pos);
  std::string_view den;
  if (pos < text.size()) {
    if (text[pos] != '/') throw fail("unexpected character");
    const std::size_t den_begin = ++pos;
    while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9') ++pos;
    if (pos == den_begin || pos != text.size()) {
      throw fail("malformed denominator");
    }
    den = text.substr(den_begin);
  }
  if (!num.empty() && num.front() == '+') num.remove_prefix(1);
  Integer n(std::string(num), 10);
  Integer d(den.empty() ? std::string("1") : std::string(den), 10);
  if (d == 0) throw fail("zero denominator");
  Rational out(n, d);
  out.canonicalize();
  return out;
}

// Canonical "p/q" (or "p" for integers).
inline std::string to_string(const Rational& r) { return r.get_str(); }

namespace detail {

inline Integer pow10(long e) {
  Integer out;
  mpz_ui_pow_ui(out.get_mpz_t(), 10, static_cast<unsigned long>(e));
  return out;
}

}  // namespace detail

// Decimal rendering with `digits` significant digits, rounded half-to-even
// from the exact value. Trailing zeros after the point are dropped.
inline std::string to_decimal_string(const Rational& r, int digits = 10) {
  if (r == 0) return "0";
  Rational a = abs(r);
  // Exponent e with 10^e <= a < 10^(e+1); start from the digit-count estimate.
  long e = static_cast<long>(mpz_sizeinbase(a.get_num_mpz_t(), 10)) -
           static_cast<long>(mpz_sizeinbase(a.get_den_mpz_t(), 10));
  auto power = [](long k) -> Rational {
    return k >= 0 ? Rational(detail::pow10(k))
                  : Rational(Integer(1), detail::pow10(-k));
  };
  while (power(e) > a) --e;
  while (power(e + 1) <= a) ++e;

  Rational scaled = a * power(digits - 1 - e);
  Integer q = scaled.get_num() / scaled.get_den();  // floor, scaled > 0
  Rational rem = scaled - Rational(q);
  const Rational half(1, 2);
  if (rem > half || (rem == half && mpz_odd_p(q.get_mpz_t()))) ++q;
  if (q == detail::pow10(digits)) {
    q = detail::pow10(digits - 1);
    ++e;
  }

  std::string body = q.get_str();
  std::string out;
  if (e >= digits - 1) {
    out = body + std::string(static_cast<std::size_t>(e - (digits - 1)), '0');
  } else if (e < 0) {
    out = "0." + std::string(static_cast<std::size_t>(-e - 1), '0') + body;
  } else {
    out = body.substr(0, static_cast<std::size_t>(e + 1)) + "." +
          body.substr(static_cast<std::size_t>(e + 1));
  }
  if (out.find('.') != std::string::npos) {
    while (out.back() == '0') out.pop_back();
    if (out.back() == '.') out.pop_back();
  }
  return r < 0 ? "-" + out : out;
}

}  // namespace rollcall

#endif  // ROLLCALL_RATIONAL_HPP
