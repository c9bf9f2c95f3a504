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

#include "bessel.hpp"

#include "error.hpp"

namespace expsig {

Constants make_constants(long precision) {
  if (precision < 53) fail(ErrorCode::kInvalidArgument, "precision must be at least 53 bits");
  const RealBall two = RealBall::exact(2, precision);
  RealBall s7 = sqrt(RealBall::exact(7, precision));
  ComplexBall w(RealBall::from_rat(Rat(-1, 2), precision), s7 / two);
  Constants k{sqrt(w), ComplexBall(precision), RealBall(precision)};
  ComplexBall z2 = k.zeta * k.zeta;
  k.alpha = z2 * k.zeta / two + k.zeta;
  k.alpha_abs2 = k.alpha.abs2();
  return k;
}

Constants negate_zeta(const Constants& k) { return {-k.zeta, -k.alpha, k.alpha_abs2}; }

RealBall bessel_tail_bound(const ComplexBall& x, int n) {
  if (n < 0) fail(ErrorCode::kInvalidArgument, "term count must be >= 0");
  const long prec = x.precision();
  Mpfr m = x.mag();
  Mpfr limit(prec);
  mpfr_set_si(limit.get(), 2L * (n + 1), MPFR_RNDN);
  if (mpfr_cmp(m.get(), limit.get()) >= 0)
    fail(ErrorCode::kDomain, "tail bound needs |x| < 2(n + 1) for n = " + std::to_string(n));
  Mpfr bound(prec);
  if (mpfr_zero_p(m.get()) && n > 0) return RealBall(prec);
  // |x/2|^{2n}
  Mpfr half(prec);
  mpfr_div_2ui(half.get(), m.get(), 1, MPFR_RNDU);
  mpfr_pow_ui(bound.get(), half.get(), 2UL * static_cast<unsigned long>(n), MPFR_RNDU);
  // / n!^2
  Mpfr fact(prec);
  mpfr_fac_ui(fact.get(), static_cast<unsigned long>(n), MPFR_RNDD);
  mpfr_sqr(fact.get(), fact.get(), MPFR_RNDD);
  mpfr_div(bound.get(), bound.get(), fact.get(), MPFR_RNDU);
  // / (1 - |x|^2 / (2n+2)^2)
  Mpfr q(prec);
  mpfr_div(q.get(), m.get(), limit.get(), MPFR_RNDU);
  mpfr_sqr(q.get(), q.get(), MPFR_RNDU);
  mpfr_ui_sub(q.get(), 1, q.get(), MPFR_RNDD);
  mpfr_div(bound.get(), bound.get(), q.get(), MPFR_RNDU);
  return RealBall(bound, Mpfr(RealBall::kRadiusBits));
}

int bessel_auto_terms(const ComplexBall& x, long prec) {
  Mpfr m = x.mag();
  Mpfr target(RealBall::kRadiusBits);
  mpfr_set_ui_2exp(target.get(), 1, 10 - prec, MPFR_RNDN);
  // Smallest admissible n is the first with |x| < 2(n + 1).
  int n = std::max(1, static_cast<int>(mpfr_get_d(m.get(), MPFR_RNDU) / 2.0));
  for (;; ++n) {
    if (n > 100000) fail(ErrorCode::kDomain, "Bessel argument too large for the power series");
    Mpfr limit(64);
    mpfr_set_si(limit.get(), 2L * (n + 1), MPFR_RNDN);
    if (mpfr_cmp(m.get(), limit.get()) >= 0) continue;
    RealBall b = bessel_tail_bound(x, n);
    if (mpfr_cmp(b.upper().get(), target.get()) < 0) return n;
  }
}

ComplexBall bessel_j(int nu, const ComplexBall& x, int n_terms) {
  if (nu != 0 && nu != 1) fail(ErrorCode::kInvalidArgument, "only J0 and J1 are supported");
  if (n_terms < 0) fail(ErrorCode::kInvalidArgument, "term count must be >= 0");
  const long prec = x.precision();
  RealBall tail = bessel_tail_bound(x, n_terms);  // validates |x| < 2(n + 1) first
  const ComplexBall half_x = x / RealBall::exact(2, prec);
  const ComplexBall w = half_x * half_x;
  ComplexBall term = nu == 0 ? ComplexBall(RealBall::exact(1, prec)) : half_x;
  ComplexBall sum(prec);
  for (int k = 0; k < n_terms; ++k) {
    sum += term;
    // t_{k+1} = -t_k w / ((k + 1)(k + 1 + nu))
    term = -(term * w) / RealBall::exact(static_cast<long>(k + 1) * (k + 1 + nu), prec);
  }
  return sum.add_error(tail.upper());
}

ComplexBall bessel_j(int nu, const ComplexBall& x) { return bessel_j(nu, x, bessel_auto_terms(x, x.precision())); }

namespace {

ComplexBall scaled(const RealBall& lambda, const ComplexBall& z) { return lambda * z; }

}  // namespace

ComplexBall d_product(const RealBall& lambda, const Constants& k) {
  const ComplexBall lz = scaled(lambda, k.zeta);
  const ComplexBall lzb = scaled(lambda, k.zeta.conj());
  return k.alpha.conj() * bessel_j(0, lz) * bessel_j(1, lzb);
}

RealBall d_lambda(const RealBall& lambda, const Constants& k) {
  if (lambda.is_negative()) fail(ErrorCode::kInvalidArgument, "lambda must be >= 0");
  return d_product(lambda, k).im();
}

RealBall d_lambda_determinant(const RealBall& lambda, const Constants& k) {
  const ComplexBall lz = scaled(lambda, k.zeta);
  const ComplexBall lzb = scaled(lambda, k.zeta.conj());
  ComplexBall det =
      k.alpha.conj() * bessel_j(0, lz) * bessel_j(1, lzb) - k.alpha * bessel_j(1, lz) * bessel_j(0, lzb);
  // det / (2i) = (Im det) / 2 - i (Re det) / 2; the real part is d.
  return det.im() / RealBall::exact(2, lambda.precision());
}

RealBall c0_numerator(const RealBall& lambda, const Constants& k) {
  return (k.alpha.conj() * bessel_j(1, scaled(lambda, k.zeta.conj()))).im();
}

RealBall c0_numerator_zeta_variant(const RealBall& lambda, const Constants& k) {
  return (k.alpha.conj() * bessel_j(1, scaled(lambda, k.zeta))).im();
}

ABC abc_closed_form(const RealBall& lambda, const RealBall& r, const Constants& k) {
  const long prec = k.precision();
  RealBall d = d_lambda(lambda, k);
  if (d.contains_zero())
    fail(ErrorCode::kPoleProximity, "pole proximity: d(lambda) enclosure contains zero at lambda = " + lambda.to_string(12));
  const ComplexBall j1b = bessel_j(1, scaled(lambda, k.zeta.conj()));
  const ComplexBall lzr = scaled(lambda * r, k.zeta);
  RealBall a = k.alpha_abs2 * (j1b * bessel_j(1, lzr)).im() / d;
  RealBall c = (k.alpha.conj() * j1b * bessel_j(0, lzr)).im() / d;
  return {a, RealBall(prec), c};
}

std::array<RealBall, 3> ode_residual(const RealBall& lambda, const Rat& r, const Rat& h, const Constants& k) {
  if (h <= 0) fail(ErrorCode::kInvalidArgument, "step must be positive");
  if (r - 2 * h <= 0 || r + 2 * h >= 1) fail(ErrorCode::kDomain, "r +/- 2h must lie inside (0, 1)");
  const long prec = k.precision();
  auto ball = [prec](const Rat& q) { return RealBall::from_rat(q, prec); };
  ABC m = abc_closed_form(lambda, ball(r - h), k);
  ABC c = abc_closed_form(lambda, ball(r), k);
  ABC p = abc_closed_form(lambda, ball(r + h), k);
  const RealBall two = RealBall::exact(2, prec);
  const RealBall hb = ball(h), rb = ball(r);
  const RealBall h2 = hb * hb;
  RealBall a1 = (p.a - m.a) / (two * hb);
  RealBall a2 = (p.a - two * c.a + m.a) / h2;
  RealBall c1 = (p.c - m.c) / (two * hb);
  RealBall c2 = (p.c - two * c.c + m.c) / h2;
  const RealBall r2 = rb * rb, l2 = lambda * lambda;
  RealBall e1 = r2 * a2 + rb * a1 - c.a + l2 * r2 * c.a + two * lambda * r2 * c1;
  RealBall e3 = c1 + rb * c2 + two * l2 * rb * c.c + two * lambda * rb * a1 + two * lambda * c.a;
  // B vanishes identically, so its difference quotients are exactly zero.
  return {e1, RealBall(prec), e3};
}

}  // namespace expsig
