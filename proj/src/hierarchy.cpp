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

#include "hierarchy.hpp"

#include <cmath>
#include <functional>

#include "error.hpp"

namespace expsig {

namespace {

// Particular solution of laplacian(u) = f. Since
//   laplacian(x^{i+2} y^j) = (i+2)(i+1) x^i y^j + j(j-1) x^{i+2} y^{j-2},
// clearing the residual term with the largest y-exponent only ever creates
// residual terms with a smaller y-exponent, so the system is triangular.
Poly2 particular_solution(const Poly2& f) {
  // Keyed by (j, i), largest first.
  std::map<std::pair<int, int>, Rat, std::greater<>> residual;
  for (const auto& [e, c] : f.terms()) residual.emplace(std::make_pair(e.j, e.i), c);
  Poly2 u;
  while (!residual.empty()) {
    auto node = residual.extract(residual.begin());
    const auto [j, i] = node.key();
    const Rat& c = node.mapped();
    Rat coef = c / ((i + 2) * (i + 1));
    u.add_term(i + 2, j, coef);
    if (j >= 2) {
      Rat spill = -coef * (j * (j - 1));
      auto [it, inserted] = residual.try_emplace(std::make_pair(j - 2, i + 2), spill);
      if (!inserted) {
        it->second += spill;
        if (it->second == 0) residual.erase(it);
      }
    }
  }
  return u;
}

}  // namespace

Poly2 solve_poisson_zero_bd(const Poly2& f) {
  if (f.is_zero()) return {};
  Poly2 u = particular_solution(f);
  u -= harmonic_extension(boundary_trace(u));
  return u;
}

Poly2 tensor_rhs(const TensorPoly& prev1, const TensorPoly& prev2, int n, std::size_t w) {
  // Word w = (i . w'') at level n. The first-order term contributes
  // -2 d_i pi_{n-1}[w'']; the second-order term -pi_{n-2}[w'''] when w = (i i . w''').
  const std::size_t rest_mask = (std::size_t{1} << (n - 1)) - 1;
  const std::size_t first = w >> (n - 1);
  const Poly2& tail = prev1.entries[w & rest_mask];
  Poly2 rhs = (first == 0 ? d_dx(tail) : d_dy(tail)) * Rat(-2);
  if (n >= 2) {
    const std::size_t second = (w >> (n - 2)) & 1u;
    if (second == first) rhs -= prev2.entries[w & ((std::size_t{1} << (n - 2)) - 1)];
  }
  return rhs;
}

Vec3Poly developed_rhs(const Vec3Poly& v, const Vec3Poly& u) {
  // M(e1) v = (v3, 0, v1), M(e2) v = (0, v3, v2); sum_i M(e_i)^2 = diag(1, 1, 2).
  Vec3Poly r;
  r[0] = d_dx(v[2]) * Rat(-2) - u[0];
  r[1] = d_dy(v[2]) * Rat(-2) - u[1];
  r[2] = (d_dx(v[0]) + d_dy(v[1])) * Rat(-2) - u[2] * Rat(2);
  return r;
}

Hierarchy::Hierarchy() {
  tensors_.emplace_back(0);
  tensors_[0].entries[0] = Poly2(1);
  tensors_.emplace_back(1);
  Vec3Poly v0;
  v0[2] = Poly2(1);
  developed_.push_back(std::move(v0));
  developed_.emplace_back();
}

const TensorPoly& Hierarchy::tensor_level(int n) {
  if (n < 0) fail(ErrorCode::kInvalidArgument, "tensor level must be >= 0");
  while (tensor_computed() < n) {
    const int m = tensor_computed() + 1;
    TensorPoly next(m);
    const TensorPoly& p1 = tensors_[static_cast<std::size_t>(m - 1)];
    const TensorPoly& p2 = tensors_[static_cast<std::size_t>(m - 2)];
    for (std::size_t w = 0; w < next.entries.size(); ++w)
      next.entries[w] = solve_poisson_zero_bd(tensor_rhs(p1, p2, m, w));
    tensors_.push_back(std::move(next));
  }
  return tensors_[static_cast<std::size_t>(n)];
}

const Vec3Poly& Hierarchy::developed_level(int n) {
  if (n < 0) fail(ErrorCode::kInvalidArgument, "developed level must be >= 0");
  while (developed_computed() < n) {
    const auto m = static_cast<std::size_t>(developed_computed() + 1);
    Vec3Poly rhs = developed_rhs(developed_[m - 1], developed_[m - 2]);
    Vec3Poly next;
    for (int k = 0; k < 3; ++k) next[k] = solve_poisson_zero_bd(rhs[k]);
    developed_.push_back(std::move(next));
  }
  return developed_[static_cast<std::size_t>(n)];
}

std::array<Rat, 3> Hierarchy::dev_coefficient(int n, const Rat& x, const Rat& y) {
  const Vec3Poly& v = developed_level(n);
  return {v[0].eval(x, y), v[1].eval(x, y), v[2].eval(x, y)};
}

LevelNorms Hierarchy::level_norms(int n) {
  const TensorPoly& t = tensor_level(n);
  LevelNorms out{0, 0};
  for (const Poly2& p : t.entries) {
    Rat v = p.coeff(0, 0);
    out.l1 += abs(v);
    out.l2sq += v * v;
  }
  return out;
}

RadiusEstimate radius_estimate(const std::vector<Rat>& coeffs) {
  RadiusEstimate r;
  for (std::size_t k = 0; 2 * k + 2 < coeffs.size(); ++k) {
    const Rat& num = coeffs[2 * k];
    const Rat& den = coeffs[2 * k + 2];
    if (den == 0)
      fail(ErrorCode::kDomain, "even coefficient a_" + std::to_string(2 * k + 2) + " vanishes");
    Rat ratio = num / den;
    if (ratio < 0)
      fail(ErrorCode::kDomain, "negative coefficient ratio at k = " + std::to_string(k));
    r.estimates.push_back(std::sqrt(ratio.get_d()));
  }
  return r;
}

}  // namespace expsig
