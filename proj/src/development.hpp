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
#include <string>
#include <vector>

#include "hierarchy.hpp"

namespace expsig {

template <class S>
using Vec3 = std::array<S, 3>;

template <class S>
struct Matrix3 {
  std::array<std::array<S, 3>, 3> m{};

  static Matrix3 identity() {
    Matrix3 r;
    for (int i = 0; i < 3; ++i) r.m[i][i] = S(1);
    return r;
  }
  S& operator()(int i, int j) { return m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]; }
  const S& operator()(int i, int j) const { return m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]; }

  friend Matrix3 operator*(const Matrix3& a, const Matrix3& b) {
    Matrix3 r;
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) {
        S acc(0);
        for (int k = 0; k < 3; ++k) acc += a(i, k) * b(k, j);
        r(i, j) = acc;
      }
    return r;
  }
  friend Vec3<S> operator*(const Matrix3& a, const Vec3<S>& v) {
    Vec3<S> r{S(0), S(0), S(0)};
    for (int i = 0; i < 3; ++i)
      for (int k = 0; k < 3; ++k) r[static_cast<std::size_t>(i)] += a(i, k) * v[static_cast<std::size_t>(k)];
    return r;
  }
  friend bool operator==(const Matrix3&, const Matrix3&) = default;
};

// The hyperbolic development of x = (x1, x2): [[0,0,x1],[0,0,x2],[x1,x2,0]].
template <class S>
Matrix3<S> m_of_vector(const S& x1, const S& x2) {
  Matrix3<S> r;
  for (auto& row : r.m) row.fill(S(0));
  r(0, 2) = x1;
  r(1, 2) = x2;
  r(2, 0) = x1;
  r(2, 1) = x2;
  return r;
}

// Ordered product M(e_{i1}) ... M(e_{in}); the empty word gives the identity.
Matrix3<Rat> m_word(const std::string& word);

// M(T) v for a level-n tensor, by right-to-left suffix contraction:
//   W_0[w] = T_w v,  W_{k+1}[w] = sum_i M(e_i) W_k[w . i],
// returning W_n[empty]. Linear in 2^n; never forms 3x3 word products.
Vec3Poly fold_apply(const TensorPoly& t, const Vec3<Rat>& v);

// The same contraction run left to right (prefix first). Used to check that
// the fold direction does not matter.
Vec3Poly fold_apply_left(const TensorPoly& t, const Vec3<Rat>& v);

// sum_{n <= N} lambda^n V_n(z). `to_scalar` lifts exact coefficients into S.
template <class S, class Lift>
Vec3<S> partial_sum_F(const S& lambda, const S& zx, const S& zy, int N, const std::vector<Vec3Poly>& levels,
                      Lift to_scalar) {
  Vec3<S> acc{to_scalar(Rat(0)), to_scalar(Rat(0)), to_scalar(Rat(0))};
  S lam_pow = to_scalar(Rat(1));
  for (int n = 0; n <= N; ++n) {
    const Vec3Poly& v = levels.at(static_cast<std::size_t>(n));
    for (int k = 0; k < 3; ++k) {
      S val = to_scalar(Rat(0));
      for (const auto& [e, c] : v[k].terms()) {
        S term = to_scalar(c);
        for (int p = 0; p < e.i; ++p) term = term * zx;
        for (int p = 0; p < e.j; ++p) term = term * zy;
        val = val + term;
      }
      acc[static_cast<std::size_t>(k)] = acc[static_cast<std::size_t>(k)] + lam_pow * val;
    }
    lam_pow = lam_pow * lambda;
  }
  return acc;
}

// Exact partial sum, pulling levels 0..N from the hierarchy.
Vec3<Rat> partial_sum_F(const Rat& lambda, const Rat& zx, const Rat& zy, int N, Hierarchy& h);

}  // namespace expsig
