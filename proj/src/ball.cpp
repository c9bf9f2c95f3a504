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

#include "ball.hpp"

#include <algorithm>

#include "error.hpp"

namespace expsig {

Mpfr::Mpfr(mpfr_prec_t prec) {
  mpfr_init2(v_, prec);
  mpfr_set_zero(v_, 1);
}

Mpfr::Mpfr(const Mpfr& o) {
  mpfr_init2(v_, o.precision());
  mpfr_set(v_, o.v_, MPFR_RNDN);
}

Mpfr::Mpfr(Mpfr&& o) noexcept {
  mpfr_init2(v_, MPFR_PREC_MIN);
  mpfr_swap(v_, o.v_);
}

Mpfr& Mpfr::operator=(const Mpfr& o) {
  if (this != &o) {
    mpfr_set_prec(v_, o.precision());
    mpfr_set(v_, o.v_, MPFR_RNDN);
  }
  return *this;
}

Mpfr& Mpfr::operator=(Mpfr&& o) noexcept {
  mpfr_swap(v_, o.v_);
  return *this;
}

Mpfr::~Mpfr() { mpfr_clear(v_); }

Rat Mpfr::to_rat() const {
  Rat q;
  mpfr_get_q(q.get_mpq_t(), v_);
  return q;
}

namespace {

using Rnd = mpfr_rnd_t;

Mpfr rad_zero() { return Mpfr(RealBall::kRadiusBits); }

// Rounding error of a round-to-nearest result m: at most half an ulp, bounded
// here by a full ulp, 2^(EXP(m) - prec).
void add_rounding_error(Mpfr& rad, const Mpfr& m, int ternary) {
  if (ternary == 0 || mpfr_zero_p(m.get())) return;
  Mpfr ulp(RealBall::kRadiusBits);
  mpfr_set_ui_2exp(ulp.get(), 1, mpfr_get_exp(m.get()) - m.precision(), MPFR_RNDU);
  mpfr_add(rad.get(), rad.get(), ulp.get(), MPFR_RNDU);
}

// |x| exactly, at x's precision.
Mpfr abs_exact(const Mpfr& x) {
  Mpfr r(x.precision());
  mpfr_abs(r.get(), x.get(), MPFR_RNDN);
  return r;
}

long max_prec(const RealBall& a, const RealBall& b) { return std::max(a.precision(), b.precision()); }

}  // namespace

RealBall::RealBall(long prec) : mid_(prec), rad_(kRadiusBits) {
  if (prec < MPFR_PREC_MIN || prec > 1L << 24) fail(ErrorCode::kInvalidArgument, "precision out of range");
}

RealBall::RealBall(Mpfr mid, Mpfr rad) : mid_(std::move(mid)), rad_(kRadiusBits) {
  if (mpfr_sgn(rad.get()) < 0 || !mpfr_number_p(rad.get())) fail(ErrorCode::kInvalidArgument, "radius must be finite and >= 0");
  mpfr_set(rad_.get(), rad.get(), MPFR_RNDU);
}

RealBall RealBall::exact(long v, long prec) {
  RealBall b(prec);
  int t = mpfr_set_si(b.mid_.get(), v, MPFR_RNDN);
  add_rounding_error(b.rad_, b.mid_, t);
  return b;
}

RealBall RealBall::from_rat(const Rat& q, long prec) {
  RealBall b(prec);
  int t = mpfr_set_q(b.mid_.get(), q.get_mpq_t(), MPFR_RNDN);
  add_rounding_error(b.rad_, b.mid_, t);
  return b;
}

RealBall RealBall::from_endpoints(const Mpfr& lo, const Mpfr& hi, long prec) {
  if (mpfr_cmp(lo.get(), hi.get()) > 0) fail(ErrorCode::kInvalidArgument, "lower endpoint exceeds upper endpoint");
  RealBall b(prec);
  mpfr_add(b.mid_.get(), lo.get(), hi.get(), MPFR_RNDN);
  mpfr_div_2ui(b.mid_.get(), b.mid_.get(), 1, MPFR_RNDN);
  Mpfr d1(kRadiusBits), d2(kRadiusBits);
  mpfr_sub(d1.get(), hi.get(), b.mid_.get(), MPFR_RNDU);
  mpfr_sub(d2.get(), b.mid_.get(), lo.get(), MPFR_RNDU);
  mpfr_max(b.rad_.get(), d1.get(), d2.get(), MPFR_RNDU);
  if (mpfr_sgn(b.rad_.get()) < 0) mpfr_set_zero(b.rad_.get(), 1);
  return b;
}

RealBall RealBall::from_endpoints(const Rat& lo, const Rat& hi, long prec) {
  if (lo > hi) fail(ErrorCode::kInvalidArgument, "lower endpoint exceeds upper endpoint");
  Mpfr l(prec), h(prec);
  mpfr_set_q(l.get(), lo.get_mpq_t(), MPFR_RNDD);
  mpfr_set_q(h.get(), hi.get_mpq_t(), MPFR_RNDU);
  return from_endpoints(l, h, prec);
}

RealBall RealBall::from_decimal(const std::string& mid, const std::string& rad, long prec) {
  Rat r = parse_rat(rad);
  if (r < 0) fail(ErrorCode::kInvalidArgument, "negative radius");
  RealBall b = from_rat(parse_rat(mid), prec);
  Mpfr e(kRadiusBits);
  mpfr_set_q(e.get(), r.get_mpq_t(), MPFR_RNDU);
  return b.add_error(e);
}

Mpfr RealBall::lower() const {
  Mpfr r(mid_.precision());
  mpfr_sub(r.get(), mid_.get(), rad_.get(), MPFR_RNDD);
  return r;
}

Mpfr RealBall::upper() const {
  Mpfr r(mid_.precision());
  mpfr_add(r.get(), mid_.get(), rad_.get(), MPFR_RNDU);
  return r;
}

Mpfr RealBall::mag() const {
  Mpfr r(mid_.precision());
  mpfr_abs(r.get(), mid_.get(), MPFR_RNDN);
  mpfr_add(r.get(), r.get(), rad_.get(), MPFR_RNDU);
  return r;
}

bool RealBall::contains(const Rat& q) const {
  Rat d = abs(q - mid_.to_rat());
  return d <= rad_.to_rat();
}

bool RealBall::contains(const RealBall& inner) const {
  const Rat m = mid_.to_rat(), r = rad_.to_rat();
  const Rat im = inner.mid_.to_rat(), ir = inner.rad_.to_rat();
  return im - ir >= m - r && im + ir <= m + r;
}

bool RealBall::overlaps(const RealBall& o) const {
  Rat d = abs(mid_.to_rat() - o.mid_.to_rat());
  return d <= rad_.to_rat() + o.rad_.to_rat();
}

bool RealBall::is_positive() const { return mpfr_sgn(lower().get()) > 0; }
bool RealBall::is_negative() const { return mpfr_sgn(upper().get()) < 0; }

RealBall RealBall::add_error(const Mpfr& err) const {
  RealBall b = *this;
  Mpfr e = abs_exact(err);
  mpfr_add(b.rad_.get(), b.rad_.get(), e.get(), MPFR_RNDU);
  return b;
}

RealBall operator+(const RealBall& a, const RealBall& b) {
  RealBall r(max_prec(a, b));
  int t = mpfr_add(r.mid_.get(), a.mid_.get(), b.mid_.get(), MPFR_RNDN);
  mpfr_add(r.rad_.get(), a.rad_.get(), b.rad_.get(), MPFR_RNDU);
  add_rounding_error(r.rad_, r.mid_, t);
  return r;
}

RealBall operator-(const RealBall& a, const RealBall& b) {
  RealBall r(max_prec(a, b));
  int t = mpfr_sub(r.mid_.get(), a.mid_.get(), b.mid_.get(), MPFR_RNDN);
  mpfr_add(r.rad_.get(), a.rad_.get(), b.rad_.get(), MPFR_RNDU);
  add_rounding_error(r.rad_, r.mid_, t);
  return r;
}

RealBall operator-(const RealBall& a) {
  RealBall r = a;
  mpfr_neg(r.mid_.get(), r.mid_.get(), MPFR_RNDN);
  return r;
}

RealBall operator*(const RealBall& a, const RealBall& b) {
  RealBall r(max_prec(a, b));
  int t = mpfr_mul(r.mid_.get(), a.mid_.get(), b.mid_.get(), MPFR_RNDN);
  // |a_m| b_r + |b_m| a_r + a_r b_r
  Mpfr am = abs_exact(a.mid_), bm = abs_exact(b.mid_);
  Mpfr t1 = rad_zero(), t2 = rad_zero(), t3 = rad_zero();
  mpfr_mul(t1.get(), am.get(), b.rad_.get(), MPFR_RNDU);
  mpfr_mul(t2.get(), bm.get(), a.rad_.get(), MPFR_RNDU);
  mpfr_mul(t3.get(), a.rad_.get(), b.rad_.get(), MPFR_RNDU);
  mpfr_add(r.rad_.get(), t1.get(), t2.get(), MPFR_RNDU);
  mpfr_add(r.rad_.get(), r.rad_.get(), t3.get(), MPFR_RNDU);
  add_rounding_error(r.rad_, r.mid_, t);
  return r;
}

RealBall operator/(const RealBall& a, const RealBall& b) {
  if (b.contains_zero()) fail(ErrorCode::kDomain, "division by a ball containing zero");
  RealBall r(max_prec(a, b));
  int t = mpfr_div(r.mid_.get(), a.mid_.get(), b.mid_.get(), MPFR_RNDN);
  // |a/b - a_m/b_m| <= (a_r + |a_m/b_m| b_r) / (|b_m| - b_r)
  Mpfr q = abs_exact(r.mid_);
  add_rounding_error(q, r.mid_, t);  // q >= |a_m / b_m|
  Mpfr num = rad_zero(), den(b.precision());
  mpfr_mul(num.get(), q.get(), b.rad_.get(), MPFR_RNDU);
  mpfr_add(num.get(), num.get(), a.rad_.get(), MPFR_RNDU);
  Mpfr bm = abs_exact(b.mid_);
  mpfr_sub(den.get(), bm.get(), b.rad_.get(), MPFR_RNDD);
  mpfr_div(r.rad_.get(), num.get(), den.get(), MPFR_RNDU);
  add_rounding_error(r.rad_, r.mid_, t);
  return r;
}

std::pair<std::string, std::string> RealBall::to_decimal(int digits) const {
  char* buf = nullptr;
  mpfr_asprintf(&buf, "%.*Re", std::max(digits - 1, 0), mid_.get());
  std::string mid_str(buf);
  mpfr_free_str(buf);
  // Exact distance between the printed and the binary midpoint.
  Rat slack = abs(parse_rat(mid_str) - mid_.to_rat());
  Mpfr rad = rad_;
  Mpfr s(kRadiusBits);
  mpfr_set_q(s.get(), slack.get_mpq_t(), MPFR_RNDU);
  mpfr_add(rad.get(), rad.get(), s.get(), MPFR_RNDU);
  mpfr_asprintf(&buf, "%.3RUe", rad.get());
  std::string rad_str(buf);
  mpfr_free_str(buf);
  return {mid_str, rad_str};
}

std::string RealBall::to_string(int digits) const {
  auto [m, r] = to_decimal(digits);
  return m + " +/- " + r;
}

RealBall sqr(const RealBall& x) {
  Mpfr hi(x.precision()), lo(x.precision());
  mpfr_sqr(hi.get(), x.mag().get(), MPFR_RNDU);
  if (!x.contains_zero()) {
    Mpfr a = x.lower(), b = x.upper();
    mpfr_abs(a.get(), a.get(), MPFR_RNDN);
    mpfr_abs(b.get(), b.get(), MPFR_RNDN);
    mpfr_min(a.get(), a.get(), b.get(), MPFR_RNDN);
    mpfr_sqr(lo.get(), a.get(), MPFR_RNDD);
  }
  return RealBall::from_endpoints(lo, hi, x.precision());
}

RealBall sqrt(const RealBall& x) {
  Mpfr lo = x.lower();
  if (mpfr_sgn(lo.get()) < 0) fail(ErrorCode::kDomain, "square root of a ball with negative points");
  Mpfr hi = x.upper();
  mpfr_sqrt(lo.get(), lo.get(), MPFR_RNDD);
  mpfr_sqrt(hi.get(), hi.get(), MPFR_RNDU);
  return RealBall::from_endpoints(lo, hi, x.precision());
}

RealBall abs(const RealBall& x) {
  if (!x.contains_zero()) return mpfr_sgn(x.mid().get()) < 0 ? -x : x;
  return RealBall::from_endpoints(Mpfr(x.precision()), x.mag(), x.precision());
}

RealBall hull(const RealBall& a, const RealBall& b) {
  Mpfr lo = a.lower(), hi = a.upper();
  Mpfr blo = b.lower(), bhi = b.upper();
  const long prec = max_prec(a, b);
  Mpfr l(prec), h(prec);
  mpfr_min(l.get(), lo.get(), blo.get(), MPFR_RNDD);
  mpfr_max(h.get(), hi.get(), bhi.get(), MPFR_RNDU);
  return RealBall::from_endpoints(l, h, prec);
}

RealBall pow(const RealBall& x, unsigned n) {
  RealBall r = RealBall::exact(1, x.precision());
  RealBall base = x;
  while (n) {
    if (n & 1u) r = r * base;
    n >>= 1;
    if (n) base = sqr(base);
  }
  return r;
}

Mpfr ComplexBall::mag() const {
  Mpfr a = re_.mag(), b = im_.mag();
  Mpfr r(precision());
  mpfr_hypot(r.get(), a.get(), b.get(), MPFR_RNDU);
  return r;
}

ComplexBall operator*(const ComplexBall& a, const ComplexBall& b) {
  return {a.re_ * b.re_ - a.im_ * b.im_, a.re_ * b.im_ + a.im_ * b.re_};
}

ComplexBall operator/(const ComplexBall& a, const ComplexBall& b) {
  RealBall n = b.abs2();
  if (n.contains_zero()) fail(ErrorCode::kDomain, "division by a complex ball containing zero");
  return (a * b.conj()) / n;
}

std::string ComplexBall::to_string(int digits) const {
  return "[" + re_.to_string(digits) + "] + [" + im_.to_string(digits) + "]*I";
}

ComplexBall sqrt(const ComplexBall& z) {
  const RealBall& a = z.re();
  const RealBall& b = z.im();
  const long prec = z.precision();
  RealBall modulus = sqrt(z.abs2());
  RealBall two = RealBall::exact(2, prec);
  if (a.is_positive()) {
    RealBall u = sqrt((modulus + a) / two);
    return {u, b / (two * u)};
  }
  if (b.is_positive() || b.is_negative()) {
    RealBall w = sqrt((modulus - a) / two);
    RealBall v = b.is_positive() ? w : -w;
    return {b / (two * v), v};
  }
  fail(ErrorCode::kDomain, "complex square root on the branch cut");
}

}  // namespace expsig
