/*
Copyright 2026 The expsig Authors
Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

                http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
*/

#include "rat.hpp"

#include <cctype>

#include "error.hpp"

namespace expsig {

std::string to_string(const Rat& q) {
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

BigInt parse_int(std::string_view s) {
  bool neg = false;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    neg = s.front() == '-';
    s.remove_prefix(1);
  }
  if (!all_digits(s)) fail(ErrorCode::kInvalidArgument, "not an integer: '" + std::string(s) + "'");
  BigInt v(std::string(s), 10);
  return neg ? BigInt(-v) : v;
}

Rat parse_decimal(std::string_view s) {
  bool neg = false;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    neg = s.front() == '-';
    s.remove_prefix(1);
  }
  long exp10 = 0;
  if (auto e = s.find_first_of("eE"); e != std::string_view::npos) {
    const BigInt e10 = parse_int(s.substr(e + 1));
    if (!e10.fits_slong_p()) fail(ErrorCode::kInvalidArgument, "decimal exponent out of range");
    exp10 = e10.get_si();
    s = s.substr(0, e);
  }
  std::string digits;
  bool seen_dot = false;
  for (char c : s) {
    if (c == '.' && !seen_dot) {
      seen_dot = true;
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      digits.push_back(c);
      if (seen_dot) --exp10;
    } else {
      fail(ErrorCode::kInvalidArgument, "malformed number: '" + std::string(s) + "'");
    }
  }
  if (digits.empty()) fail(ErrorCode::kInvalidArgument, "malformed number");
  if (exp10 > 100000 || exp10 < -100000) fail(ErrorCode::kInvalidArgument, "decimal exponent out of range");
  Rat q(BigInt(digits, 10));
  BigInt p;
  mpz_ui_pow_ui(p.get_mpz_t(), 10, static_cast<unsigned long>(exp10 < 0 ? -exp10 : exp10));
  if (exp10 >= 0)
    q *= p;
  else
    q /= p;
  return neg ? Rat(-q) : q;
}

}  // namespace

Rat parse_rat(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  if (text.empty()) fail(ErrorCode::kInvalidArgument, "empty rational");
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    BigInt num = parse_int(text.substr(0, slash));
    BigInt den = parse_int(text.substr(slash + 1));
    if (den == 0) fail(ErrorCode::kInvalidArgument, "zero denominator in '" + std::string(text) + "'");
    Rat q(num, den);
    q.canonicalize();
    return q;
  }
  return parse_decimal(text);
}

Rat abs(const Rat& q) { return q < 0 ? Rat(-q) : q; }

}  // namespace expsig
