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
#include <optional>
#include <vector>

#include "poly2.hpp"

namespace expsig {

// Developed level V_n(z) = M(pi_n Phi(z)) (0, 0, 1)^T, one polynomial per component.
struct Vec3Poly {
  std::array<Poly2, 3> c;

  Poly2& operator[](int k) { return c[static_cast<std::size_t>(k)]; }
  const Poly2& operator[](int k) const { return c[static_cast<std::size_t>(k)]; }
  friend bool operator==(const Vec3Poly&, const Vec3Poly&) = default;
};

// Returns u with laplacian(u) == f and boundary_trace(u) == 0, exactly.
Poly2 solve_poisson_zero_bd(const Poly2& f);

// Right-hand side of the level-n PDE for tensor entry `word_index`, given the
// two previous levels.
Poly2 tensor_rhs(const TensorPoly& prev1, const TensorPoly& prev2, int n, std::size_t word_index);
// Right-hand side of the developed PDE, -2 sum_i M(e_i) d_i V_{n-1} - diag(1,1,2) V_{n-2}.
Vec3Poly developed_rhs(const Vec3Poly& prev1, const Vec3Poly& prev2);

struct LevelNorms {
  Rat l1;    // sum_w |entry_w(0, 0)|
  Rat l2sq;  // sum_w entry_w(0, 0)^2
};

// Exact solution of the expected-signature PDE hierarchy on the unit disk.
//
// Both hierarchies are grown lazily and memoized. Level n only depends on
// levels n - 1 and n - 2, so extension is sequential; accessors return
// references that stay valid until the next extension.
class Hierarchy {
 public:
  static constexpr int kDefaultTensorCap = 12;
  static constexpr int kDefaultDevelopedCap = 60;

  Hierarchy();

  // pi_n(Phi(z)). Rejects n < 0.
  const TensorPoly& tensor_level(int n);
  // V_n(z). Rejects n < 0.
  const Vec3Poly& developed_level(int n);

  int tensor_computed() const { return static_cast<int>(tensors_.size()) - 1; }
  int developed_computed() const { return static_cast<int>(developed_.size()) - 1; }

  // Exact value of V_n at z.
  std::array<Rat, 3> dev_coefficient(int n, const Rat& x, const Rat& y);
  // a_n: third component of V_n(0).
  Rat a(int n) { return dev_coefficient(n, 0, 0)[2]; }

  LevelNorms level_norms(int n);

 private:
  std::vector<TensorPoly> tensors_;
  std::vector<Vec3Poly> developed_;
};

struct RadiusEstimate {
  // estimates[k] = sqrt(a_{2k} / a_{2k+2}), relative accuracy about 1e-15.
  std::vector<double> estimates;
  std::optional<double> last() const {
    if (estimates.empty()) return std::nullopt;
    return estimates.back();
  }
};

// Ratio diagnostic over a_0 .. a_N. Throws kDomain when an even coefficient
// used as a divisor vanishes or a ratio is negative.
RadiusEstimate radius_estimate(const std::vector<Rat>& coeffs);

}  // namespace expsig
