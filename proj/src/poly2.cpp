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

#include "poly2.hpp"

#include <algorithm>
#include <mutex>
#include <sstream>

#include "error.hpp"

namespace expsig {

Poly2::Poly2(const Rat& c) {
  if (c != 0) terms_.emplace(Exponent{0, 0}, c);
}

Poly2 Poly2::monomial(const Rat& c, int i, int j) {
  Poly2 p;
  p.add_term(i, j, c);
  return p;
}

int Poly2::degree() const {
  int d = -1;
  for (const auto& [e, c] : terms_) d = std::max(d, e.i + e.j);
  return d;
}

Rat Poly2::coeff(int i, int j) const {
  auto it = terms_.find({i, j});
  return it == terms_.end() ? Rat(0) : it->second;
}

void Poly2::add_term(int i, int j, const Rat& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(Exponent{i, j}, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Rat Poly2::eval(const Rat& x, const Rat& y) const {
  // Powers are cached per call; hierarchy polynomials are dense in degree.
  std::vector<Rat> xp{Rat(1)}, yp{Rat(1)};
  Rat acc = 0;
  for (const auto& [e, c] : terms_) {
    while (static_cast<int>(xp.size()) <= e.i) xp.push_back(xp.back() * x);
    while (static_cast<int>(yp.size()) <= e.j) yp.push_back(yp.back() * y);
    acc += c * xp[e.i] * yp[e.j];
  }
  return acc;
}

Poly2 Poly2::at_y_zero() const {
  Poly2 p;
  for (const auto& [e, c] : terms_)
    if (e.j == 0) p.terms_.emplace(e, c);
  return p;
}

Poly2 Poly2::rotated_quarter() const {
  // x^i y^j at (-y, x) is (-1)^i x^j y^i.
  Poly2 p;
  for (const auto& [e, c] : terms_) p.terms_.emplace(Exponent{e.j, e.i}, (e.i % 2) ? Rat(-c) : c);
  return p;
}

Poly2& Poly2::operator+=(const Poly2& o) {
  for (const auto& [e, c] : o.terms_) add_term(e.i, e.j, c);
  return *this;
}

Poly2& Poly2::operator-=(const Poly2& o) {
  for (const auto& [e, c] : o.terms_) add_term(e.i, e.j, -c);
  return *this;
}

Poly2& Poly2::operator*=(const Rat& c) {
  if (c == 0) {
    terms_.clear();
  } else {
    for (auto& [e, v] : terms_) v *= c;
  }
  return *this;
}

Poly2 operator*(const Poly2& a, const Poly2& b) {
  Poly2 p;
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) p.add_term(ea.i + eb.i, ea.j + eb.j, ca * cb);
  return p;
}

std::string Poly2::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    if (!first) os << " + ";
    first = false;
    os << "(" << c.get_str() << ")";
    if (e.i) os << "*x^" << e.i;
    if (e.j) os << "*y^" << e.j;
  }
  return os.str();
}

Poly2 d_dx(const Poly2& p) {
  Poly2 r;
  for (const auto& [e, c] : p.terms())
    if (e.i > 0) r.add_term(e.i - 1, e.j, c * e.i);
  return r;
}

Poly2 d_dy(const Poly2& p) {
  Poly2 r;
  for (const auto& [e, c] : p.terms())
    if (e.j > 0) r.add_term(e.i, e.j - 1, c * e.j);
  return r;
}

Poly2 laplacian(const Poly2& p) {
  Poly2 r;
  for (const auto& [e, c] : p.terms()) {
    if (e.i > 1) r.add_term(e.i - 2, e.j, c * (e.i * (e.i - 1)));
    if (e.j > 1) r.add_term(e.i, e.j - 2, c * (e.j * (e.j - 1)));
  }
  return r;
}

void TrigPoly::add_cos(int k, const Rat& c) {
  if (k < 0) fail(ErrorCode::kInvalidArgument, "negative frequency");
  if (c == 0) return;
  auto [it, inserted] = cos_.try_emplace(k, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) cos_.erase(it);
  }
}

void TrigPoly::add_sin(int k, const Rat& c) {
  if (k < 0) fail(ErrorCode::kInvalidArgument, "negative frequency");
  if (c == 0 || k == 0) return;
  auto [it, inserted] = sin_.try_emplace(k, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) sin_.erase(it);
  }
}

TrigPoly& TrigPoly::operator+=(const TrigPoly& o) {
  for (const auto& [k, c] : o.cos_) add_cos(k, c);
  for (const auto& [k, c] : o.sin_) add_sin(k, c);
  return *this;
}

TrigPoly& TrigPoly::operator*=(const Rat& c) {
  if (c == 0) {
    cos_.clear();
    sin_.clear();
    return *this;
  }
  for (auto& [k, v] : cos_) v *= c;
  for (auto& [k, v] : sin_) v *= c;
  return *this;
}

namespace {

BigInt binomial(int n, int k) {
  BigInt r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

// cos^a sin^b = 2^-(a+b) (-i)^b (E + 1/E)^a (E - 1/E)^b with E = e^{i theta}.
// The Laurent coefficients c_k satisfy c_{-k} = (-1)^b c_k, which folds the
// product onto cos k theta (b even) or sin k theta (b odd).
TrigPoly monomial_trace_uncached(int a, int b) {
  std::map<int, BigInt> laurent;
  for (int p = 0; p <= a; ++p) {
    BigInt cp = binomial(a, p);
    for (int q = 0; q <= b; ++q) {
      BigInt cq = binomial(b, q);
      if (q % 2) cq = -cq;
      laurent[(a - 2 * p) + (b - 2 * q)] += cp * cq;
    }
  }
  Rat scale(1);
  mpz_mul_2exp(scale.get_den_mpz_t(), scale.get_den_mpz_t(), static_cast<unsigned long>(a + b));
  if ((b / 2) % 2) scale = -scale;
  TrigPoly t;
  for (const auto& [k, c] : laurent) {
    if (k < 0 || c == 0) continue;
    if (b % 2 == 0) {
      t.add_cos(k, (k == 0 ? Rat(c) : Rat(2 * c)) * scale);
    } else {
      t.add_sin(k, Rat(2 * c) * scale);
    }
  }
  return t;
}

const TrigPoly& monomial_trace(int a, int b) {
  static std::mutex mu;
  static std::map<Exponent, TrigPoly> cache;
  std::lock_guard lock(mu);
  auto it = cache.find({a, b});
  if (it == cache.end()) it = cache.emplace(Exponent{a, b}, monomial_trace_uncached(a, b)).first;
  return it->second;  // map nodes are stable
}

// Re and Im of (x + iy)^k.
const std::pair<Poly2, Poly2>& harmonic_pair(int k) {
  static std::mutex mu;
  static std::map<int, std::pair<Poly2, Poly2>> cache;
  std::lock_guard lock(mu);
  auto it = cache.find(k);
  if (it != cache.end()) return it->second;
  Poly2 re, im;
  for (int j = 0; j <= k; ++j) {
    // i^j cycles 1, i, -1, -i.
    Rat c(binomial(k, j));
    switch (j % 4) {
      case 0: re.add_term(k - j, j, c); break;
      case 1: im.add_term(k - j, j, c); break;
      case 2: re.add_term(k - j, j, -c); break;
      default: im.add_term(k - j, j, -c); break;
    }
  }
  return cache.emplace(k, std::make_pair(std::move(re), std::move(im))).first->second;
}

}  // namespace

TrigPoly boundary_trace(const Poly2& p) {
  // Accumulate per frequency directly; cheaper than TrigPoly::operator+= per term.
  std::map<int, Rat> cs, sn;
  for (const auto& [e, c] : p.terms()) {
    const TrigPoly& m = monomial_trace(e.i, e.j);
    for (const auto& [k, v] : m.cos_terms()) cs[k] += c * v;
    for (const auto& [k, v] : m.sin_terms()) sn[k] += c * v;
  }
  TrigPoly t;
  for (const auto& [k, v] : cs) t.add_cos(k, v);
  for (const auto& [k, v] : sn) t.add_sin(k, v);
  return t;
}

Poly2 harmonic_extension(const TrigPoly& t) {
  Poly2 p;
  for (const auto& [k, c] : t.cos_terms()) p += harmonic_pair(k).first * c;
  for (const auto& [k, c] : t.sin_terms()) p += harmonic_pair(k).second * c;
  return p;
}

std::string word_string(std::size_t index, int length) {
  std::string w(static_cast<std::size_t>(length), '1');
  for (int pos = length - 1; pos >= 0; --pos, index >>= 1)
    if (index & 1u) w[static_cast<std::size_t>(pos)] = '2';
  return w;
}

std::size_t word_index(const std::string& word) {
  std::size_t idx = 0;
  for (char c : word) {
    if (c != '1' && c != '2') fail(ErrorCode::kInvalidArgument, "word letters must be 1 or 2: '" + word + "'");
    idx = (idx << 1) | static_cast<std::size_t>(c == '2');
  }
  return idx;
}

TensorPoly::TensorPoly(int n) : level(n) {
  if (n < 0) fail(ErrorCode::kInvalidArgument, "negative tensor level");
  entries.resize(std::size_t{1} << n);
}

}  // namespace expsig
