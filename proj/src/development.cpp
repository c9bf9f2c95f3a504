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

#include "development.hpp"

#include "error.hpp"

namespace expsig {

namespace {

// M(e_1) w = (w3, 0, w1), M(e_2) w = (0, w3, w2).
void add_m_e(int letter, const Vec3Poly& w, Vec3Poly& out) {
  if (letter == 0) {
    out[0] += w[2];
    out[2] += w[0];
  } else {
    out[1] += w[2];
    out[2] += w[1];
  }
}

}  // namespace

Matrix3<Rat> m_word(const std::string& word) {
  Matrix3<Rat> r = Matrix3<Rat>::identity();
  const Matrix3<Rat> e1 = m_of_vector<Rat>(1, 0);
  const Matrix3<Rat> e2 = m_of_vector<Rat>(0, 1);
  for (char c : word) {
    if (c == '1')
      r = r * e1;
    else if (c == '2')
      r = r * e2;
    else
      fail(ErrorCode::kInvalidArgument, "word letters must be 1 or 2: '" + word + "'");
  }
  return r;
}

Vec3Poly fold_apply(const TensorPoly& t, const Vec3<Rat>& v) {
  std::vector<Vec3Poly> stage(t.entries.size());
  for (std::size_t w = 0; w < t.entries.size(); ++w)
    for (int k = 0; k < 3; ++k) stage[w][k] = t.entries[w] * v[static_cast<std::size_t>(k)];
  // Suffix contraction: the last letter of each word is the least significant bit.
  for (int len = t.level; len > 0; --len) {
    std::vector<Vec3Poly> next(stage.size() / 2);
    for (std::size_t w = 0; w < next.size(); ++w) {
      add_m_e(0, stage[2 * w], next[w]);
      add_m_e(1, stage[2 * w + 1], next[w]);
    }
    stage = std::move(next);
  }
  return stage.front();
}

Vec3Poly fold_apply_left(const TensorPoly& t, const Vec3<Rat>& v) {
  // Prefix products P[w] = M(e_{w1}) ... M(e_{wk}) grown one letter at a time,
  // then sum_w T_w P[w] v.
  const int n = t.level;
  std::vector<Matrix3<Rat>> prefix{Matrix3<Rat>::identity()};
  const Matrix3<Rat> me[2] = {m_of_vector<Rat>(1, 0), m_of_vector<Rat>(0, 1)};
  for (int len = 0; len < n; ++len) {
    std::vector<Matrix3<Rat>> next;
    next.reserve(prefix.size() * 2);
    for (const auto& p : prefix) {
      next.push_back(p * me[0]);
      next.push_back(p * me[1]);
    }
    prefix = std::move(next);
  }
  Vec3Poly out;
  for (std::size_t w = 0; w < t.entries.size(); ++w) {
    Vec3<Rat> mv = prefix[w] * v;
    for (int k = 0; k < 3; ++k)
      if (mv[static_cast<std::size_t>(k)] != 0) out[k] += t.entries[w] * mv[static_cast<std::size_t>(k)];
  }
  return out;
}

Vec3<Rat> partial_sum_F(const Rat& lambda, const Rat& zx, const Rat& zy, int N, Hierarchy& h) {
  if (N < 0) fail(ErrorCode::kInvalidArgument, "N must be >= 0");
  Vec3<Rat> acc{0, 0, 0};
  Rat lam_pow = 1;
  for (int n = 0; n <= N; ++n) {
    auto v = h.dev_coefficient(n, zx, zy);
    for (int k = 0; k < 3; ++k) acc[static_cast<std::size_t>(k)] += lam_pow * v[static_cast<std::size_t>(k)];
    lam_pow *= lambda;
  }
  return acc;
}

}  // namespace expsig
