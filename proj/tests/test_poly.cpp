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
#include "generators.hpp"
#include "poly2.hpp"

using namespace expsig;
using expsig::testing::Gen;
using expsig::testing::kCases;

namespace {

Poly2 X() { return Poly2::x(); }
Poly2 Y() { return Poly2::y(); }

// Oracle for the trace: evaluate at rational points of the circle
// ((1 - t^2) / (1 + t^2), 2t / (1 + t^2)), where cos k theta and sin k theta
// are rational via the Chebyshev recurrences.
Rat trig_eval(const TrigPoly& t, const Rat& c, const Rat& s) {
  Rat sum = 0;
  int kmax = 0;
  for (const auto& [k, v] : t.cos_terms()) kmax = std::max(kmax, k);
  for (const auto& [k, v] : t.sin_terms()) kmax = std::max(kmax, k);
  std::vector<Rat> ck{1}, sk{0};
  for (int k = 1; k <= kmax; ++k) {
    ck.push_back(ck.back() * c - sk.back() * s);
    sk.push_back(sk[static_cast<std::size_t>(k - 1)] * c + ck[static_cast<std::size_t>(k - 1)] * s);
  }
  for (const auto& [k, v] : t.cos_terms()) sum += v * ck[static_cast<std::size_t>(k)];
  for (const auto& [k, v] : t.sin_terms()) sum += v * sk[static_cast<std::size_t>(k)];
  return sum;
}

}  // namespace

TEST_CASE("rationals print as num/den and parse exactly") {
  CHECK(to_string(Rat(0)) == "0/1");
  CHECK(to_string(Rat(3)) == "3/1");
  CHECK(to_string(Rat(1, 2) - Rat(2)) == "-3/2");
  CHECK(parse_rat("7") == 7);
  CHECK(parse_rat("-3/6") == Rat(-1, 2));
  CHECK(parse_rat("2.82") == Rat(141, 50));
  CHECK(parse_rat("1e-6") == Rat(1, 1000000));
  CHECK(parse_rat("-1.5e-3") == Rat(-3, 2000));
  CHECK(parse_rat("+0.25") == Rat(1, 4));
  CHECK_THROWS_AS(parse_rat(""), Error);
  CHECK_THROWS_AS(parse_rat("1/0"), Error);
  CHECK_THROWS_AS(parse_rat("abc"), Error);
  CHECK_THROWS_AS(parse_rat("1.2.3"), Error);
  CHECK_THROWS_AS(parse_rat("nan"), Error);
}

TEST_CASE("ring operations") {
  CHECK((X() + (-X())).is_zero());
  CHECK((X() + Y()) * (X() - Y()) == X() * X() - Y() * Y());
  Gen g(11);
  for (int c = 0; c < kCases; ++c) {
    const Poly2 p = g.poly();
    CHECK(Poly2(1) * p == p);
    CHECK(p * Poly2(0) == Poly2());
    CHECK((p - p).is_zero());
  }
  CHECK(Poly2().degree() == -1);
  CHECK(Poly2(5).degree() == 0);
  CHECK((X() * X() * Y()).degree() == 3);
}

TEST_CASE("zero coefficients are never stored") {
  Poly2 p = X() + Y();
  p.add_term(1, 0, -1);
  CHECK(p.size() == 1);
  CHECK(p == Y());
  CHECK((Rat(0) * p).is_zero());
}

TEST_CASE("evaluation, restriction and quarter turn") {
  const Poly2 p = X() * X() * Y() + Rat(3) * Y() - 2;
  CHECK(p.eval(2, Rat(1, 3)) == Rat(4, 3) + 1 - 2);
  CHECK(p.at_y_zero() == Poly2(-2));
  // p(-y, x)
  CHECK(p.rotated_quarter() == Y() * Y() * X() + Rat(3) * X() - 2);
  Gen g(12);
  for (int c = 0; c < kCases; ++c) {
    const Poly2 q = g.poly();
    const Rat x = g.rat(), y = g.rat();
    CHECK(q.rotated_quarter().eval(x, y) == q.eval(-y, x));
    CHECK(q.rotated_quarter().rotated_quarter().rotated_quarter().rotated_quarter() == q);
  }
}

TEST_CASE("partials") {
  auto [px, py] = partials(X() * X() * Y());
  CHECK(px == Rat(2) * X() * Y());
  CHECK(py == X() * X());
  auto [cx, cy] = partials(Poly2(7));
  CHECK(cx.is_zero());
  CHECK(cy.is_zero());
  CHECK(d_dx(X() * X() * X()) == Rat(3) * X() * X());
  CHECK(d_dy(X() * X() * X()).is_zero());
}

TEST_CASE("laplacian") {
  CHECK(laplacian(X() * X() + Y() * Y()) == Poly2(4));
  CHECK(laplacian(X() * X() * X()) == Rat(6) * X());
  CHECK(laplacian(Rat(1, 4) * (Poly2(1) - X() * X() - Y() * Y())) == Poly2(-1));
}

TEST_CASE("laplacian product rule, random polynomials") {
  Gen g(13);
  for (int c = 0; c < kCases; ++c) {
    const Poly2 p = g.poly(), q = g.poly();
    const Poly2 lhs = laplacian(p * q);
    const Poly2 rhs = p * laplacian(q) + q * laplacian(p) + Rat(2) * (d_dx(p) * d_dx(q) + d_dy(p) * d_dy(q));
    REQUIRE(lhs == rhs);
  }
}

TEST_CASE("boundary trace") {
  TrigPoly cos1;
  cos1.add_cos(1, 1);
  CHECK(boundary_trace(X()) == cos1);
  CHECK(boundary_trace(Poly2(1) - X() * X() - Y() * Y()).is_zero());
  TrigPoly half;
  half.add_cos(0, Rat(1, 2));
  half.add_cos(2, Rat(1, 2));
  CHECK(boundary_trace(X() * X()) == half);
  CHECK(boundary_trace(Poly2()).is_zero());
}

TEST_CASE("boundary trace agrees with evaluation on rational circle points") {
  Gen g(14);
  for (int c = 0; c < kCases; ++c) {
    const Poly2 p = g.poly(7, 8);
    const Rat t = g.rat(9, 7);
    const Rat cs = (1 - t * t) / (1 + t * t), sn = 2 * t / (1 + t * t);
    REQUIRE(trig_eval(boundary_trace(p), cs, sn) == p.eval(cs, sn));
  }
}

TEST_CASE("harmonic extension") {
  TrigPoly cos1, cos2, konst;
  cos1.add_cos(1, 1);
  cos2.add_cos(2, 1);
  konst.add_cos(0, Rat(5, 3));
  CHECK(harmonic_extension(cos1) == X());
  CHECK(harmonic_extension(konst) == Poly2(Rat(5, 3)));
  CHECK(harmonic_extension(cos2) == X() * X() - Y() * Y());
  TrigPoly sin3;
  sin3.add_sin(3, 1);
  // Im (x + iy)^3
  CHECK(harmonic_extension(sin3) == Rat(3) * X() * X() * Y() - Y() * Y() * Y());
}

TEST_CASE("trace inverts extension and extensions are harmonic") {
  Gen g(15);
  for (int c = 0; c < kCases; ++c) {
    const TrigPoly t = g.trig(9);
    const Poly2 u = harmonic_extension(t);
    REQUIRE(boundary_trace(u) == t);
    REQUIRE(laplacian(u).is_zero());
  }
}

TEST_CASE("words index lexicographically with the first letter most significant") {
  CHECK(word_index("") == 0);
  CHECK(word_index("1") == 0);
  CHECK(word_index("2") == 1);
  CHECK(word_index("12") == 1);
  CHECK(word_index("21") == 2);
  CHECK(word_index("211") == 4);
  CHECK(word_string(4, 3) == "211");
  CHECK(word_string(0, 0) == "");
  Gen g(16);
  for (int c = 0; c < kCases; ++c) {
    const std::string w = g.word(g.integer(1, 10));
    CHECK(word_string(word_index(w), static_cast<int>(w.size())) == w);
  }
  CHECK_THROWS_AS(word_index("13"), Error);
}

TEST_CASE("tensor containers") {
  TensorPoly t0;
  CHECK(t0.level == 0);
  CHECK(t0.entries.size() == 1);
  TensorPoly t3(3);
  CHECK(t3.entries.size() == 8);
  CHECK(t3.at("212").is_zero());
}
