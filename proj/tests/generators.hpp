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

// Seeded generators for the property tests. Each suite builds its own Gen so
// failures reproduce from the printed seed.

#pragma once

#include <cstdint>
#include <random>
#include <string>

#include "montecarlo.hpp"
#include "poly2.hpp"

namespace expsig::testing {

inline constexpr int kCases = 100;

class Gen {
 public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}

  int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }
  double real(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng_); }
  bool coin() { return integer(0, 1) == 1; }

  Rat rat(int max_num = 20, int max_den = 12) {
    Rat q(integer(-max_num, max_num), integer(1, max_den));
    q.canonicalize();
    return q;
  }

  Poly2 poly(int max_degree = 5, int max_terms = 6) {
    Poly2 p;
    const int n = integer(0, max_terms);
    for (int t = 0; t < n; ++t) {
      const int d = integer(0, max_degree);
      const int i = integer(0, d);
      p.add_term(i, d - i, rat());
    }
    return p;
  }

  TrigPoly trig(int max_freq = 6) {
    TrigPoly t;
    const int n = integer(0, 5);
    for (int k = 0; k < n; ++k) {
      const int f = integer(0, max_freq);
      if (f == 0 || coin())
        t.add_cos(f, rat());
      else
        t.add_sin(f, rat());
    }
    return t;
  }

  TensorPoly tensor(int level, int max_degree = 3) {
    TensorPoly t(level);
    for (auto& e : t.entries) e = poly(max_degree, 3);
    return t;
  }

  std::string word(int length) {
    std::string w;
    for (int k = 0; k < length; ++k) w += coin() ? '2' : '1';
    return w;
  }

  Increment increment(double scale = 0.3) { return {real(-scale, scale), real(-scale, scale)}; }

 private:
  std::mt19937_64 rng_;
};

}  // namespace expsig::testing
