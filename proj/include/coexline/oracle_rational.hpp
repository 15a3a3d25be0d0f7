// Copyright 2026 The coexline Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef COEXLINE_ORACLE_RATIONAL_HPP
#define COEXLINE_ORACLE_RATIONAL_HPP

// Exact-rational instantiation of the oracle. Requires GMP's C++ bindings.

#include <gmpxx.h>

#include <cctype>
#include <string>

#include "coexline/error.hpp"
#include "coexline/oracle.hpp"

namespace coexline::oracle {

using Rational = mpq_class;

/// Parses "3", "-2", "1.25", "0.5e-1" or "3/2" into an exact rational, so that
/// decimal input means the decimal number rather than its binary rounding.
inline Rational parse_rational(const std::string& text) {
  auto bad = [&] { return DomainError("parse_rational: cannot parse '" + text + "'"); };
  if (text.empty()) throw bad();
  if (const auto slash = text.find('/'); slash != std::string::npos) {
    Rational q;
    if (q.set_str(text, 10) != 0) throw bad();
    q.canonicalize();
    return q;
  }
  std::size_t pos = 0;
  bool negative = false;
  if (text[pos] == '+' || text[pos] == '-') negative = text[pos++] == '-';
  std::string digits;
  long exponent = 0;
  bool seen_digit = false, seen_point = false;
  for (; pos < text.size(); ++pos) {
    const char c = text[pos];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      digits.push_back(c);
      seen_digit = true;
      if (seen_point) --exponent;
    } else if (c == '.' && !seen_point) {
      seen_point = true;
    } else if (c == 'e' || c == 'E') {
      try {
        std::size_t used = 0;
        exponent += std::stol(text.substr(pos + 1), &used);
        if (pos + 1 + used != text.size()) throw bad();
      } catch (const std::logic_error&) {
        throw bad();
      }
      pos = text.size();
      break;
    } else {
      throw bad();
    }
  }
  if (!seen_digit) throw bad();
  mpz_class num(digits, 10);
  mpz_class scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(exponent < 0 ? -exponent : exponent));
  Rational q = exponent < 0 ? Rational(num, scale) : Rational(num * scale, 1);
  q.canonicalize();
  return negative ? Rational(-q) : q;
}

}  // namespace coexline::oracle

#endif  // COEXLINE_ORACLE_RATIONAL_HPP
