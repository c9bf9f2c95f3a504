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

#include <string>

#include "bessel.hpp"

namespace expsig {

// Stored evidence that d changes sign on [lo, hi] while the numerator of
// C_lambda(0) stays negative there. Everything needed to re-check it is in
// the stored balls; no Bessel evaluation is required.
struct PoleCertificate {
  Rat lo;
  Rat hi;
  RealBall d_lo;             // upper bound < 0
  RealBall d_hi;             // lower bound > 0
  RealBall numerator_bound;  // upper bound of Im(conj(alpha) J1(lambda conj zeta)) on [lo, hi]; < 0
  long precision = 0;
  int j0_terms = 0;
  int j1_terms = 0;
  int numerator_pieces = 0;
  int bisection_steps = 0;
};

enum class SignStatus { kSignChange, kNoSignChange, kInconclusive };

struct SignCheck {
  SignStatus status;
  RealBall d_lo;
  RealBall d_hi;
};

// Evaluates d at the two rational endpoints. kNoSignChange means both signs
// are certified and equal; kInconclusive means at least one ball straddles 0.
SignCheck verify_sign_change(const Rat& lo, const Rat& hi, long precision = kDefaultPrecision);

struct NumeratorCheck {
  RealBall bound;  // point ball at the largest certified upper bound
  int pieces = 0;
};

// Encloses Im(conj(alpha) J1(lambda conj zeta)) over [lo, hi] with lambda as
// an interval ball, splitting the worst piece until every piece is certified
// negative and the worst enclosure is narrower than 1/64, or until the budget
// of subdivisions runs out. Throws Error(kCannotCertify) when some piece
// could not be shown negative within the budget.
NumeratorCheck verify_numerator_nonvanishing(const Rat& lo, const Rat& hi, int max_subdivisions = 512,
                                             long precision = kDefaultPrecision);

inline constexpr long kMaxPrecision = 4096;

// Bisection from (5/2, 3) on certified signs of d. An inconclusive midpoint is
// shifted by 1/16 of the bracket, then precision is doubled (up to
// kMaxPrecision) before giving up with Error(kPrecisionCeiling).
PoleCertificate locate_pole(const Rat& target_width, long precision = kDefaultPrecision);

// Re-checks a certificate from its stored balls: ordered bracket inside
// [5/2, 3], d_lo < 0 < d_hi, numerator bound < 0. Returns an empty string on
// success, otherwise the first failed condition.
std::string check_certificate(const PoleCertificate& cert);

}  // namespace expsig
