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

#include <mpfr.h>

#include <string>
#include <utility>

#include "rat.hpp"

namespace expsig {

inline constexpr long kDefaultPrecision = 128;

// Owning mpfr_t.
class Mpfr {
 public:
  explicit Mpfr(mpfr_prec_t prec);
  Mpfr(const Mpfr& o);
  Mpfr(Mpfr&& o) noexcept;
  Mpfr& operator=(const Mpfr& o);
  Mpfr& operator=(Mpfr&& o) noexcept;
  ~Mpfr();

  mpfr_ptr get() { return v_; }
  mpfr_srcptr get() const { return v_; }
  mpfr_prec_t precision() const { return mpfr_get_prec(v_); }
  Rat to_rat() const;  // exact
  double to_double(mpfr_rnd_t rnd = MPFR_RNDN) const { return mpfr_get_d(v_, rnd); }

 private:
  mpfr_t v_;
};

// Midpoint-radius enclosure [mid - rad, mid + rad]. The midpoint carries the
// working precision; the radius is a 64-bit float that is only ever rounded
// upward. Every operation returns a ball containing the exact image of every
// point of its inputs.
class RealBall {
 public:
  static constexpr mpfr_prec_t kRadiusBits = 64;

  explicit RealBall(long prec = kDefaultPrecision);
  RealBall(Mpfr mid, Mpfr rad);

  static RealBall exact(long v, long prec = kDefaultPrecision);
  static RealBall from_rat(const Rat& q, long prec = kDefaultPrecision);
  // Smallest ball (up to rounding) containing [lo, hi].
  static RealBall from_endpoints(const Mpfr& lo, const Mpfr& hi, long prec);
  static RealBall from_endpoints(const Rat& lo, const Rat& hi, long prec = kDefaultPrecision);
  // Exact decimal midpoint and radius; the radius is rounded up.
  static RealBall from_decimal(const std::string& mid, const std::string& rad, long prec = kDefaultPrecision);

  long precision() const { return static_cast<long>(mid_.precision()); }
  const Mpfr& mid() const { return mid_; }
  const Mpfr& rad() const { return rad_; }
  Mpfr lower() const;
  Mpfr upper() const;
  double lower_double() const { return lower().to_double(MPFR_RNDD); }
  double upper_double() const { return upper().to_double(MPFR_RNDU); }
  double mid_double() const { return mid_.to_double(); }
  // Upper bound of |x| over the ball.
  Mpfr mag() const;

  bool contains(const Rat& q) const;
  bool contains(const RealBall& inner) const;
  bool overlaps(const RealBall& o) const;
  bool contains_zero() const { return contains(Rat(0)); }
  bool is_positive() const;  // lower bound > 0
  bool is_negative() const;  // upper bound < 0
  bool is_exact() const { return mpfr_zero_p(rad_.get()) != 0; }

  RealBall add_error(const Mpfr& err) const;

  friend RealBall operator+(const RealBall& a, const RealBall& b);
  friend RealBall operator-(const RealBall& a, const RealBall& b);
  friend RealBall operator*(const RealBall& a, const RealBall& b);
  // Throws Error(kDomain) when b contains zero.
  friend RealBall operator/(const RealBall& a, const RealBall& b);
  friend RealBall operator-(const RealBall& a);
  RealBall& operator+=(const RealBall& b) { return *this = *this + b; }
  RealBall& operator-=(const RealBall& b) { return *this = *this - b; }
  RealBall& operator*=(const RealBall& b) { return *this = *this * b; }

  // Decimal rendering that stays an enclosure: the returned radius absorbs the
  // decimal rounding of the midpoint.
  std::pair<std::string, std::string> to_decimal(int digits = 20) const;
  // "mid +/- rad"
  std::string to_string(int digits = 20) const;

 private:
  Mpfr mid_;
  Mpfr rad_;
};

// Throws Error(kDomain) if the ball has negative points.
RealBall sqrt(const RealBall& x);
RealBall sqr(const RealBall& x);
RealBall abs(const RealBall& x);
// Convex hull.
RealBall hull(const RealBall& a, const RealBall& b);
RealBall pow(const RealBall& x, unsigned n);

class ComplexBall {
 public:
  explicit ComplexBall(long prec = kDefaultPrecision) : re_(prec), im_(prec) {}
  ComplexBall(RealBall re, RealBall im) : re_(std::move(re)), im_(std::move(im)) {}
  explicit ComplexBall(const RealBall& re) : re_(re), im_(re.precision()) {}

  const RealBall& re() const { return re_; }
  const RealBall& im() const { return im_; }
  long precision() const { return std::max(re_.precision(), im_.precision()); }

  ComplexBall conj() const { return {re_, -im_}; }
  RealBall abs2() const { return sqr(re_) + sqr(im_); }
  // Upper bound of |z| over the ball.
  Mpfr mag() const;

  bool contains_zero() const { return re_.contains_zero() && im_.contains_zero(); }
  bool overlaps(const ComplexBall& o) const { return re_.overlaps(o.re_) && im_.overlaps(o.im_); }
  bool contains(const ComplexBall& inner) const { return re_.contains(inner.re_) && im_.contains(inner.im_); }

  friend ComplexBall operator+(const ComplexBall& a, const ComplexBall& b) { return {a.re_ + b.re_, a.im_ + b.im_}; }
  friend ComplexBall operator-(const ComplexBall& a, const ComplexBall& b) { return {a.re_ - b.re_, a.im_ - b.im_}; }
  friend ComplexBall operator-(const ComplexBall& a) { return {-a.re_, -a.im_}; }
  friend ComplexBall operator*(const ComplexBall& a, const ComplexBall& b);
  friend ComplexBall operator*(const ComplexBall& a, const RealBall& s) { return {a.re_ * s, a.im_ * s}; }
  friend ComplexBall operator*(const RealBall& s, const ComplexBall& a) { return {a.re_ * s, a.im_ * s}; }
  friend ComplexBall operator/(const ComplexBall& a, const RealBall& s) { return {a.re_ / s, a.im_ / s}; }
  friend ComplexBall operator/(const ComplexBall& a, const ComplexBall& b);
  ComplexBall& operator+=(const ComplexBall& b) { return *this = *this + b; }
  ComplexBall& operator*=(const ComplexBall& b) { return *this = *this * b; }

  // Widen both parts by err.
  ComplexBall add_error(const Mpfr& err) const { return {re_.add_error(err), im_.add_error(err)}; }

  std::string to_string(int digits = 20) const;

 private:
  RealBall re_;
  RealBall im_;
};

// Principal square root. Throws Error(kDomain) when the ball touches the
// branch cut (non-positive reals) in a way that leaves the branch ambiguous.
ComplexBall sqrt(const ComplexBall& z);

}  // namespace expsig
