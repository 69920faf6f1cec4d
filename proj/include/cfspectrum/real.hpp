// Copyright 2026 The cfspectrum Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef CFSPECTRUM_REAL_HPP_
#define CFSPECTRUM_REAL_HPP_

#include <mpfr.h>

#include <optional>

#include "cfspectrum/numeric.hpp"

namespace cfs {

inline constexpr mpfr_prec_t kDefaultPrec = 128;

// A rigorous enclosure [lo, hi] of a real number. Every operation rounds
// the lower endpoint down and the upper endpoint up, so the true value of
// the represented expression never escapes the interval. Exposed as
// midpoint/radius where callers want the "value +/- error" view; both are
// exact rationals (binary floats convert to rationals losslessly).
class CertifiedReal {
 public:
  CertifiedReal();  // exact zero
  CertifiedReal(const CertifiedReal& o);
  CertifiedReal(CertifiedReal&& o) noexcept;
  CertifiedReal& operator=(const CertifiedReal& o);
  CertifiedReal& operator=(CertifiedReal&& o) noexcept;
  ~CertifiedReal();

  static CertifiedReal exact(long v, mpfr_prec_t prec = kDefaultPrec);
  static CertifiedReal exact(const BigInt& v);
  // Exact when the rational is a binary float at this precision, an
  // outward-rounded enclosure otherwise.
  static CertifiedReal from_rational(const Rational& v,
                                     mpfr_prec_t prec = kDefaultPrec);
  static CertifiedReal from_endpoints(const Rational& lo, const Rational& hi,
                                      mpfr_prec_t prec = kDefaultPrec);
  // Enclosure of log(z) for an exact big integer z >= 1.
  static CertifiedReal log_of(const BigInt& z, mpfr_prec_t prec = kDefaultPrec);
  static CertifiedReal pi(mpfr_prec_t prec = kDefaultPrec);
  static CertifiedReal hull(const CertifiedReal& a, const CertifiedReal& b);

  mpfr_prec_t precision() const { return prec_; }
  Rational lower() const;
  Rational upper() const;
  Rational midpoint() const;
  Rational radius() const;  // half-width; true value in [mid - rad, mid + rad]
  double to_double() const;
  bool is_point() const;  // lo == hi

  CertifiedReal operator-() const;
  CertifiedReal operator+(const CertifiedReal& o) const;
  CertifiedReal operator-(const CertifiedReal& o) const;
  CertifiedReal operator*(const CertifiedReal& o) const;
  CertifiedReal operator/(const CertifiedReal& o) const;  // 0 not in o
  CertifiedReal operator+(long v) const { return *this + exact(v, prec_); }
  CertifiedReal operator-(long v) const { return *this - exact(v, prec_); }
  CertifiedReal operator*(long v) const { return *this * exact(v, prec_); }

  CertifiedReal exp() const;
  CertifiedReal log() const;    // requires lower() > 0
  CertifiedReal log1p() const;  // requires lower() > -1
  CertifiedReal pow(const CertifiedReal& y) const;  // requires lower() > 0
  // k^y for an exact integer base k >= 1; one directed rounding per side.
  static CertifiedReal int_pow(long k, const CertifiedReal& y);
  CertifiedReal abs() const;

  bool contains(const Rational& v) const;
  bool contains_zero() const;
  bool is_positive() const;  // lo > 0

  // Largest integer f with [lo, hi] inside [f, f+1); nullopt if the
  // enclosure straddles an integer boundary.
  std::optional<BigInt> floor_certified() const;

  // Certified order vs an exact rational; nullopt when undecidable.
  std::optional<bool> less_than(const Rational& r) const;
  std::optional<bool> greater_than(const Rational& r) const;

  // a <= b certainly / certainly not; nullopt when the enclosures overlap.
  static std::optional<bool> certainly_le(const CertifiedReal& a,
                                          const CertifiedReal& b);
  static bool overlap(const CertifiedReal& a, const CertifiedReal& b);

 private:
  explicit CertifiedReal(mpfr_prec_t prec);
  static mpfr_prec_t join(const CertifiedReal& a, const CertifiedReal& b);

  mpfr_t lo_;
  mpfr_t hi_;
  mpfr_prec_t prec_;
};

}  // namespace cfs

#endif  // CFSPECTRUM_REAL_HPP_
