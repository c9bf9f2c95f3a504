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

#include <cmath>

#include "development.hpp"
#include "doctest.h"
#include "error.hpp"
#include "generators.hpp"
#include "hierarchy.hpp"

using namespace expsig;
using expsig::testing::Gen;
using expsig::testing::kCases;

namespace {

Poly2 X() { return Poly2::x(); }
Poly2 Y() { return Poly2::y(); }
Poly2 one_minus_r2() { return Poly2(1) - X() * X() - Y() * Y(); }

}  // namespace

TEST_CASE("poisson solver examples") {
  CHECK(solve_poisson_zero_bd(Poly2()).is_zero());
  CHECK(solve_poisson_zero_bd(Poly2(-1)) == Rat(1, 4) * one_minus_r2());
  CHECK(solve_poisson_zero_bd(X()) == Rat(1, 8) * X() * (X() * X() + Y() * Y() - 1));
}

TEST_CASE("poisson solver, random right-hand sides") {
  Gen g(21);
  for (int c = 0; c < kCases; ++c) {
    const Poly2 f = g.poly(8, 8);
    const Poly2 u = solve_poisson_zero_bd(f);
    REQUIRE(laplacian(u) == f);
    REQUIRE(boundary_trace(u).is_zero());
    REQUIRE(u.degree() <= std::max(f.degree() + 2, 0));
  }
}

TEST_CASE("first tensor levels") {
  Hierarchy h;
  const TensorPoly& t0 = h.tensor_level(0);
  CHECK(t0.level == 0);
  CHECK(t0.entries[0] == Poly2(1));
  const TensorPoly& t1 = h.tensor_level(1);
  CHECK(t1.entries.size() == 2);
  CHECK(t1.at("1").is_zero());
  CHECK(t1.at("2").is_zero());
  const TensorPoly& t2 = h.tensor_level(2);
  CHECK(t2.at("11") == Rat(1, 4) * one_minus_r2());
  CHECK(t2.at("22") == Rat(1, 4) * one_minus_r2());
  CHECK(t2.at("12").is_zero());
  CHECK(t2.at("21").is_zero());
  CHECK_THROWS_AS(h.tensor_level(-1), Error);
}

TEST_CASE("first developed levels and coefficients") {
  Hierarchy h;
  CHECK(h.developed_level(0) == Vec3Poly{{Poly2(), Poly2(), Poly2(1)}});
  CHECK(h.developed_level(1) == Vec3Poly{});
  CHECK(h.developed_level(2) == Vec3Poly{{Poly2(), Poly2(), Rat(1, 2) * one_minus_r2()}});
  CHECK(h.dev_coefficient(0, 0, 0) == std::array<Rat, 3>{0, 0, 1});
  CHECK(h.dev_coefficient(2, 0, 0) == std::array<Rat, 3>{0, 0, Rat(1, 2)});
  for (int n = 1; n <= 21; n += 2) CHECK(h.a(n) == 0);
  // Regression fixtures from the exact run.
  CHECK(h.a(4) == Rat(1, 16));
  CHECK(h.a(6) == Rat(1, 192));
  CHECK(h.a(8) == Rat(11, 18432));
  CHECK_THROWS_AS(h.developed_level(-3), Error);
}

TEST_CASE("level norms") {
  Hierarchy h;
  CHECK(h.level_norms(0).l1 == 1);
  CHECK(h.level_norms(0).l2sq == 1);
  CHECK(h.level_norms(2).l1 == Rat(1, 2));
  CHECK(h.level_norms(2).l2sq == Rat(1, 8));
  CHECK(h.level_norms(3).l1 == 0);
  CHECK(h.level_norms(3).l2sq == 0);
  for (int n = 0; n <= 8; ++n) {
    const LevelNorms nm = h.level_norms(n);
    // l2 <= l1 <= sqrt(2^n) l2
    CHECK(nm.l2sq <= nm.l1 * nm.l1);
    CHECK(nm.l1 * nm.l1 <= Rat(1 << n) * nm.l2sq);
  }
}

TEST_CASE("exact PDE residual, boundary, degree and symmetry invariants") {
  Hierarchy h;
  for (int n = 0; n <= 8; ++n) {
    const TensorPoly& t = h.tensor_level(n);
    for (std::size_t w = 0; w < t.entries.size(); ++w) {
      if (n >= 2) REQUIRE((laplacian(t.entries[w]) - tensor_rhs(h.tensor_level(n - 1), h.tensor_level(n - 2), n, w)).is_zero());
      if (n >= 1) REQUIRE(boundary_trace(t.entries[w]).is_zero());
      REQUIRE(t.entries[w].degree() <= n);
    }
  }
  for (int n = 0; n <= 24; ++n) {
    const Vec3Poly& v = h.developed_level(n);
    if (n >= 2) {
      const Vec3Poly rhs = developed_rhs(h.developed_level(n - 1), h.developed_level(n - 2));
      for (int k = 0; k < 3; ++k) REQUIRE((laplacian(v[k]) - rhs[k]).is_zero());
    }
    for (int k = 0; k < 3; ++k) {
      if (n >= 1) REQUIRE(boundary_trace(v[k]).is_zero());
      REQUIRE(v[k].degree() <= n);
    }
    REQUIRE(v[1].at_y_zero().is_zero());
    // V_n(R z) = (R + 1) V_n(z)
    REQUIRE(v[0].rotated_quarter() == -v[1]);
    REQUIRE(v[1].rotated_quarter() == v[0]);
    REQUIRE(v[2].rotated_quarter() == v[2]);
  }
}

TEST_CASE("tensor and developed hierarchies are tied by the fold") {
  Hierarchy h;
  for (int n = 0; n <= 8; ++n) REQUIRE(fold_apply(h.tensor_level(n), {0, 0, 1}) == h.developed_level(n));
}

TEST_CASE("tensor quarter-turn equivariance") {
  // pi_n(Phi(R z)) = R^{(x) n} pi_n(Phi(z)), with R e1 = e2, R e2 = -e1.
  Hierarchy h;
  for (int n = 0; n <= 6; ++n) {
    const TensorPoly& t = h.tensor_level(n);
    TensorPoly rotated_values(n);
    for (std::size_t w = 0; w < t.entries.size(); ++w) {
      // (R^{(x)n} T)_u = sum_w prod_k R[u_k][w_k] T_w; R[1][2] = -1, R[2][1] = 1.
      std::size_t u = 0;
      int sign = 1;
      for (int k = n - 1; k >= 0; --k) {
        const bool letter2 = (w >> k) & 1u;
        u = (u << 1) | static_cast<std::size_t>(!letter2);
        if (letter2) sign = -sign;
      }
      rotated_values.entries[u] = Rat(sign) * t.entries[w];
    }
    for (std::size_t w = 0; w < t.entries.size(); ++w)
      REQUIRE(t.entries[w].rotated_quarter() == rotated_values.entries[w]);
  }
}

TEST_CASE("radius estimates") {
  std::vector<Rat> geometric, constant;
  BigInt pow3 = 1;
  for (int n = 0; n <= 20; ++n) {
    geometric.push_back(n % 2 ? Rat(0) : Rat(BigInt(1), pow3));
    constant.push_back(1);
    pow3 *= 3;
  }
  for (double e : radius_estimate(geometric).estimates) CHECK(e == doctest::Approx(3.0).epsilon(1e-14));
  for (double e : radius_estimate(constant).estimates) CHECK(e == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(radius_estimate(constant).estimates.size() == 10);
  CHECK(radius_estimate({Rat(1)}).estimates.empty());
  CHECK_THROWS_AS(radius_estimate({Rat(1), Rat(0), Rat(0), Rat(0), Rat(1)}), Error);
  CHECK_THROWS_AS(radius_estimate({Rat(1), Rat(0), Rat(-1)}), Error);
}

TEST_CASE("radius estimates from the hierarchy settle inside (2.5, 3)") {
  Hierarchy h;
  std::vector<Rat> a;
  for (int n = 0; n <= 42; ++n) a.push_back(h.a(n));
  const RadiusEstimate r = radius_estimate(a);
  REQUIRE(r.estimates.size() == 21);
  for (std::size_t k = 10; k < r.estimates.size(); ++k) {
    CHECK(r.estimates[k] > 2.5);
    CHECK(r.estimates[k] < 3.0);
  }
}
