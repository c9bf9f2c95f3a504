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

#include "doctest.h"
#include "error.hpp"
#include "pole.hpp"
#include "serialize.hpp"

using namespace expsig;

TEST_CASE("sign change on (2.5, 3)") {
  const SignCheck s = verify_sign_change(Rat(5, 2), Rat(3));
  CHECK(s.status == SignStatus::kSignChange);
  CHECK(s.d_lo.upper_double() < -0.06);
  CHECK(s.d_hi.lower_double() > 0.03);
}

TEST_CASE("sign change on (2.82, 2.83)") {
  const SignCheck s = verify_sign_change(Rat(282, 100), Rat(283, 100));
  CHECK(s.status == SignStatus::kSignChange);
  CHECK(s.d_lo.is_negative());
  CHECK(s.d_hi.is_positive());
}

TEST_CASE("no sign change on (0.1, 0.2)") {
  const SignCheck s = verify_sign_change(Rat(1, 10), Rat(2, 10));
  CHECK(s.status == SignStatus::kNoSignChange);
  // Observed: d is negative on both ends.
  CHECK(s.d_lo.is_negative());
  CHECK(s.d_hi.is_negative());
}

TEST_CASE("numerator stays negative on [2.5, 3]") {
  const NumeratorCheck n = verify_numerator_nonvanishing(Rat(5, 2), Rat(3));
  CHECK(n.bound.upper_double() <= -1.3);
  CHECK(n.pieces >= 1);
}

TEST_CASE("numerator inside the band on [2.82, 2.83]") {
  const NumeratorCheck n = verify_numerator_nonvanishing(Rat(282, 100), Rat(283, 100));
  CHECK(n.bound.upper_double() < -3.697);
  CHECK(n.bound.upper_double() > -4.303);
}

TEST_CASE("numerator at a single point") {
  const NumeratorCheck n = verify_numerator_nonvanishing(Rat(27, 10), Rat(27, 10));
  CHECK(n.bound.is_negative());
  CHECK(n.pieces == 1);
}

TEST_CASE("numerator check rejects intervals outside [2.5, 3]") {
  CHECK_THROWS_AS(verify_numerator_nonvanishing(Rat(2), Rat(3)), Error);
  CHECK_THROWS_AS(verify_numerator_nonvanishing(Rat(3), Rat(5, 2)), Error);
}

TEST_CASE("locate with width 1/100") {
  const PoleCertificate c = locate_pole(Rat(1, 100));
  CHECK(c.lo >= Rat(282, 100));
  CHECK(c.hi <= Rat(283, 100));
  CHECK(c.hi - c.lo <= Rat(1, 100));
  CHECK(check_certificate(c).empty());
}

TEST_CASE("locate with width 1e-6") {
  const PoleCertificate c = locate_pole(Rat(1, 1000000));
  CHECK(c.lo >= Rat(282, 100));
  CHECK(c.hi <= Rat(283, 100));
  CHECK(c.hi - c.lo <= Rat(1, 1000000));
  CHECK(c.d_lo.is_negative());
  CHECK(c.d_hi.is_positive());
  CHECK(c.numerator_bound.is_negative());
  // First zero of d from an independent mpmath evaluation.
  CHECK(c.lo < parse_rat("2.823886981639"));
  CHECK(c.hi > parse_rat("2.823886981639"));
  CHECK(check_certificate(c).empty());
}

TEST_CASE("invalid widths") {
  CHECK_THROWS_AS(locate_pole(Rat(0)), Error);
  CHECK_THROWS_AS(locate_pole(Rat(-1, 10)), Error);
}

TEST_CASE("higher precision never flips a certified sign") {
  const Constants k128 = make_constants(128), k512 = make_constants(512);
  for (const Rat& lam : {Rat(5, 2), Rat(282, 100), Rat(2824, 1000), Rat(283, 100), Rat(3)}) {
    const RealBall lo = d_lambda(RealBall::from_rat(lam, 128), k128);
    const RealBall hi = d_lambda(RealBall::from_rat(lam, 512), k512);
    if (lo.is_negative()) CHECK(hi.is_negative());
    if (lo.is_positive()) CHECK(hi.is_positive());
    CHECK(lo.overlaps(hi));
  }
}

TEST_CASE("certificates survive a JSON round trip and tampering is caught") {
  const PoleCertificate c = locate_pole(Rat(1, 1000));
  const Json j = certificate_to_json(c);
  CHECK(j["schema"] == kCertificateSchema);
  const PoleCertificate back = certificate_from_json(Json::parse(j.dump()));
  CHECK(back.lo == c.lo);
  CHECK(back.hi == c.hi);
  CHECK(check_certificate(back).empty());

  Json swapped = j;
  std::swap(swapped["d_lo"], swapped["d_hi"]);
  CHECK_FALSE(check_certificate(certificate_from_json(swapped)).empty());

  Json positive_numerator = j;
  positive_numerator["numerator_bound"]["mid"] = "1.0";
  CHECK_FALSE(check_certificate(certificate_from_json(positive_numerator)).empty());

  Json outside = j;
  outside["bracket"]["hi"] = "4/1";
  CHECK_FALSE(check_certificate(certificate_from_json(outside)).empty());

  Json inverted = j;
  inverted["bracket"]["lo"] = j["bracket"]["hi"];
  inverted["bracket"]["hi"] = j["bracket"]["lo"];
  CHECK_FALSE(check_certificate(certificate_from_json(inverted)).empty());

  Json wrong_schema = j;
  wrong_schema["schema"] = "something-else/1";
  CHECK_THROWS_AS(certificate_from_json(wrong_schema), Error);
}
