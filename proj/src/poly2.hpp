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

#include <compare>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "rat.hpp"

namespace expsig {

// Exponent pair of the monomial x^i y^j.
struct Exponent {
  int i = 0;
  int j = 0;
  auto operator<=>(const Exponent&) const = default;
};

// Sparse bivariate polynomial over Rat. Zero coefficients are never stored,
// so the zero polynomial is the empty map and == is structural equality.
class Poly2 {
 public:
  using Terms = std::map<Exponent, Rat>;

  Poly2() = default;
  Poly2(const Rat& c);  // NOLINT(google-explicit-constructor): constants promote.
  Poly2(int c) : Poly2(Rat(c)) {}  // NOLINT

  static Poly2 monomial(const Rat& c, int i, int j);
  static Poly2 x() { return monomial(1, 1, 0); }
  static Poly2 y() { return monomial(1, 0, 1); }

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  // Total degree; -1 for the zero polynomial.
  int degree() const;
  Rat coeff(int i, int j) const;

  void add_term(int i, int j, const Rat& c);

  Rat eval(const Rat& x, const Rat& y) const;
  // p(x, 0).
  Poly2 at_y_zero() const;
  // p(R z) for the quarter turn R(x, y) = (-y, x).
  Poly2 rotated_quarter() const;

  Poly2& operator+=(const Poly2& o);
  Poly2& operator-=(const Poly2& o);
  Poly2& operator*=(const Rat& c);
  friend Poly2 operator+(Poly2 a, const Poly2& b) { return a += b; }
  friend Poly2 operator-(Poly2 a, const Poly2& b) { return a -= b; }
  friend Poly2 operator-(Poly2 a) { return a *= Rat(-1); }
  friend Poly2 operator*(Poly2 a, const Rat& c) { return a *= c; }
  friend Poly2 operator*(const Rat& c, Poly2 a) { return a *= c; }
  friend Poly2 operator*(const Poly2& a, const Poly2& b);
  friend bool operator==(const Poly2&, const Poly2&) = default;

  std::string to_string() const;

 private:
  Terms terms_;
};

Poly2 d_dx(const Poly2& p);
Poly2 d_dy(const Poly2& p);
inline std::pair<Poly2, Poly2> partials(const Poly2& p) { return {d_dx(p), d_dy(p)}; }
Poly2 laplacian(const Poly2& p);

// a_0 + sum_k (c_k cos k theta + s_k sin k theta); no zero coefficients stored,
// and sin(0 theta) never appears.
class TrigPoly {
 public:
  const std::map<int, Rat>& cos_terms() const { return cos_; }
  const std::map<int, Rat>& sin_terms() const { return sin_; }
  bool is_zero() const { return cos_.empty() && sin_.empty(); }

  void add_cos(int k, const Rat& c);
  void add_sin(int k, const Rat& c);
  TrigPoly& operator+=(const TrigPoly& o);
  TrigPoly& operator*=(const Rat& c);
  friend bool operator==(const TrigPoly&, const TrigPoly&) = default;

 private:
  std::map<int, Rat> cos_;
  std::map<int, Rat> sin_;
};

// Restriction to the unit circle, x = cos theta, y = sin theta, reduced to the
// Fourier basis by product-to-sum.
TrigPoly boundary_trace(const Poly2& p);

// cos k theta -> Re (x + iy)^k, sin k theta -> Im (x + iy)^k.
Poly2 harmonic_extension(const TrigPoly& t);

// Words over {1, 2} of length n map to indices 0 .. 2^n - 1 with the first
// letter as the most significant bit (letter 1 -> 0, letter 2 -> 1), so the
// index order is the lexicographic word order.
std::string word_string(std::size_t index, int length);
std::size_t word_index(const std::string& word);

// Level-n element of (R^2)^{(x) n} with polynomial entries.
struct TensorPoly {
  int level = 0;
  std::vector<Poly2> entries;  // exactly 2^level entries

  TensorPoly() : entries(1) {}
  explicit TensorPoly(int n);

  const Poly2& at(const std::string& word) const { return entries.at(word_index(word)); }
  friend bool operator==(const TensorPoly&, const TensorPoly&) = default;
};

}  // namespace expsig
