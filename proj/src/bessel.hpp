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

#pragma once

#include <array>

#include "ball.hpp"

namespace expsig {

// zeta = principal sqrt((-1 + i sqrt 7) / 2), a root of z^4 + z^2 + 2, and
// alpha = zeta^3 / 2 + zeta. Changing zeta to -zeta flips alpha and leaves
// A, B, C unchanged.
struct Constants {
  ComplexBall zeta;
  ComplexBall alpha;
  RealBall alpha_abs2;  // |alpha|^2 = sqrt 2

  long precision() const { return zeta.precision(); }
};

// Requires precision >= 53.
Constants make_constants(long precision = kDefaultPrecision);
// The same constants with zeta replaced by -zeta.
Constants negate_zeta(const Constants& k);

// Upper bound for the tails sum_{k >= n} of both the J0 and J1 series:
//   (1 - |x|^2 / (2n + 2)^2)^{-1} |x / 2|^{2n} / n!^2.
// Throws Error(kDomain) unless |x| < 2(n + 1) over the whole ball.
RealBall bessel_tail_bound(const ComplexBall& x, int n);

// Number of series terms such that the tail bound is below 2^(10 - prec).
int bessel_auto_terms(const ComplexBall& x, long prec);

// J_nu(x) for nu in {0, 1}: the first n_terms terms of the power series in
// ball arithmetic, widened by bessel_tail_bound(x, n_terms).
ComplexBall bessel_j(int nu, const ComplexBall& x, int n_terms);
ComplexBall bessel_j(int nu, const ComplexBall& x);

// conj(alpha) J0(lambda zeta) J1(lambda conj(zeta)).
ComplexBall d_product(const RealBall& lambda, const Constants& k);
// d(lambda) = Im d_product(lambda).
RealBall d_lambda(const RealBall& lambda, const Constants& k);
// d(lambda) via the determinant identity
//   conj(a) J0(l z) J1(l conj z) - a J1(l z) J0(l conj z) = 2 i d(l),
// with every Bessel value evaluated separately (no conjugate shortcuts).
RealBall d_lambda_determinant(const RealBall& lambda, const Constants& k);

// Im(conj(alpha) J1(lambda conj(zeta))): the numerator of C_lambda(0) (J0(0) = 1).
RealBall c0_numerator(const RealBall& lambda, const Constants& k);
// Im(conj(alpha) J1(lambda zeta)), the other possible reading of the
// numerator. Kept for the sign cross-check.
RealBall c0_numerator_zeta_variant(const RealBall& lambda, const Constants& k);

struct ABC {
  RealBall a;
  RealBall b;
  RealBall c;
};

// Closed-form radial profiles with B = 0 exactly:
//   A(r) = |alpha|^2 / d * Im(J1(l conj z) J1(l z r))
//   C(r) = 1 / d * Im(conj(alpha) J1(l conj z) J0(l z r))
// Throws Error(kPoleProximity) when the d(lambda) ball contains zero.
ABC abc_closed_form(const RealBall& lambda, const RealBall& r, const Constants& k);

// Central-difference residuals of
//   r^2 A'' + r A' - A + l^2 r^2 A + 2 l r^2 C' = 0
//   r^2 B'' + r B' - B + l^2 r^2 B = 0
//   C' + r C'' + 2 l^2 r C + 2 l r A' + 2 l A = 0
// sampled from abc_closed_form at r - h, r, r + h. Requires r +/- 2h inside (0, 1).
std::array<RealBall, 3> ode_residual(const RealBall& lambda, const Rat& r, const Rat& h, const Constants& k);

}  // namespace expsig
