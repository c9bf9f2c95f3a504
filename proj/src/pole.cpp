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

#include "pole.hpp"

#include <algorithm>
#include <vector>

#include "error.hpp"

namespace expsig {

namespace {

const Rat kInitialLo(5, 2);
const Rat kInitialHi(3);

int sign_of(const RealBall& b) {
  if (b.is_positive()) return 1;
  if (b.is_negative()) return -1;
  return 0;
}

RealBall d_at(const Rat& lambda, const Constants& k) {
  return d_lambda(RealBall::from_rat(lambda, k.precision()), k);
}

}  // namespace

SignCheck verify_sign_change(const Rat& lo, const Rat& hi, long precision) {
  if (lo < 0 || lo >= hi) fail(ErrorCode::kInvalidArgument, "need 0 <= lo < hi");
  const Constants k = make_constants(precision);
  RealBall dl = d_at(lo, k), dh = d_at(hi, k);
  const int sl = sign_of(dl), sh = sign_of(dh);
  SignStatus st = SignStatus::kInconclusive;
  if (sl != 0 && sh != 0) st = sl != sh ? SignStatus::kSignChange : SignStatus::kNoSignChange;
  return {st, std::move(dl), std::move(dh)};
}

NumeratorCheck verify_numerator_nonvanishing(const Rat& lo, const Rat& hi, int max_subdivisions, long precision) {
  if (lo > hi) fail(ErrorCode::kInvalidArgument, "need lo <= hi");
  if (lo < kInitialLo || hi > kInitialHi) fail(ErrorCode::kInvalidArgument, "interval must lie in [5/2, 3]");
  const Constants k = make_constants(precision);
  const Rat tolerance(1, 64);

  struct Piece {
    Rat lo, hi;
    RealBall value;
  };
  auto evaluate = [&](const Rat& a, const Rat& b) {
    return Piece{a, b, c0_numerator(RealBall::from_endpoints(a, b, precision), k)};
  };
  std::vector<Piece> pieces{evaluate(lo, hi)};
  int splits = 0;
  auto upper_of = [](const Piece& p) { return p.value.upper().to_rat(); };

  for (;;) {
    auto worst = std::max_element(pieces.begin(), pieces.end(),
                                  [&](const Piece& a, const Piece& b) { return upper_of(a) < upper_of(b); });
    const bool certified = worst->value.is_negative();
    const Rat width = worst->value.upper().to_rat() - worst->value.lower().to_rat();
    if (certified && width <= tolerance) break;
    if (worst->lo == worst->hi || splits >= max_subdivisions) {
      if (certified) break;
      fail(ErrorCode::kCannotCertify,
           "cannot certify a negative numerator on [" + worst->lo.get_str() + ", " + worst->hi.get_str() + "]");
    }
    const Rat a = worst->lo, b = worst->hi, mid = (a + b) / 2;
    *worst = evaluate(a, mid);
    pieces.push_back(evaluate(mid, b));
    ++splits;
  }

  Mpfr worst_upper = pieces.front().value.upper();
  for (const Piece& p : pieces) {
    Mpfr u = p.value.upper();
    if (mpfr_cmp(u.get(), worst_upper.get()) > 0) worst_upper = u;
  }
  return {RealBall(worst_upper, Mpfr(RealBall::kRadiusBits)), static_cast<int>(pieces.size())};
}

PoleCertificate locate_pole(const Rat& target_width, long precision) {
  if (target_width <= 0) fail(ErrorCode::kInvalidArgument, "target width must be positive");
  if (precision < 53 || precision > kMaxPrecision) fail(ErrorCode::kInvalidArgument, "precision out of range");

  long prec = precision;
  Constants k = make_constants(prec);
  auto escalate = [&]() {
    if (prec * 2 > kMaxPrecision) fail(ErrorCode::kPrecisionCeiling, "precision ceiling reached at " + std::to_string(prec) + " bits");
    prec *= 2;
    k = make_constants(prec);
  };

  Rat lo = kInitialLo, hi = kInitialHi;
  RealBall d_lo = d_at(lo, k), d_hi = d_at(hi, k);
  while (sign_of(d_lo) == 0 || sign_of(d_hi) == 0) {
    escalate();
    d_lo = d_at(lo, k);
    d_hi = d_at(hi, k);
  }
  if (!(d_lo.is_negative() && d_hi.is_positive()))
    fail(ErrorCode::kInternal, "d does not change sign from - to + on the initial bracket");

  int steps = 0;
  while (hi - lo > target_width) {
    const Rat width = hi - lo;
    Rat mid = (lo + hi) / 2;
    RealBall dm = d_at(mid, k);
    if (sign_of(dm) == 0) {
      mid += width / 16;
      dm = d_at(mid, k);
    }
    while (sign_of(dm) == 0) {
      escalate();
      dm = d_at(mid, k);
    }
    if (dm.is_negative()) {
      lo = mid;
      d_lo = std::move(dm);
    } else {
      hi = mid;
      d_hi = std::move(dm);
    }
    ++steps;
  }

  // Endpoint balls at the final precision, so the certificate is uniform.
  d_lo = d_at(lo, k);
  d_hi = d_at(hi, k);
  NumeratorCheck num = verify_numerator_nonvanishing(lo, hi, 512, prec);

  const ComplexBall x = RealBall::from_rat(hi, prec) * k.zeta;
  const int terms = bessel_auto_terms(x, prec);
  PoleCertificate cert{lo, hi, d_lo, d_hi, num.bound, prec, terms, terms, num.pieces, steps};
  if (std::string why = check_certificate(cert); !why.empty()) fail(ErrorCode::kInternal, "certificate self-check failed: " + why);
  return cert;
}

std::string check_certificate(const PoleCertificate& c) {
  if (!(c.lo < c.hi)) return "bracket is not ordered";
  if (c.lo < kInitialLo || c.hi > kInitialHi) return "bracket is not inside [5/2, 3]";
  // Exact rational comparisons on the stored midpoints and radii.
  const Rat dl_upper = c.d_lo.mid().to_rat() + c.d_lo.rad().to_rat();
  const Rat dh_lower = c.d_hi.mid().to_rat() - c.d_hi.rad().to_rat();
  const Rat num_upper = c.numerator_bound.mid().to_rat() + c.numerator_bound.rad().to_rat();
  if (!(dl_upper < 0)) return "d(lo) is not certified negative";
  if (!(dh_lower > 0)) return "d(hi) is not certified positive";
  if (!(num_upper < 0)) return "numerator bound is not negative";
  return {};
}

}  // namespace expsig
