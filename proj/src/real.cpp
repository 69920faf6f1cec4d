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

#include "cfspectrum/real.hpp"

#include <algorithm>

namespace cfs {

namespace {

Rational mpfr_to_rational(const mpfr_t x) {
  Rational r;
  mpfr_get_q(r.get_mpq_t(), x);
  r.canonicalize();
  return r;
}

}  // namespace

CertifiedReal::CertifiedReal(mpfr_prec_t prec) : prec_(prec) {
  mpfr_init2(lo_, prec_);
  mpfr_init2(hi_, prec_);
}

CertifiedReal::CertifiedReal() : CertifiedReal(kDefaultPrec) {
  mpfr_set_zero(lo_, 1);
  mpfr_set_zero(hi_, 1);
}

CertifiedReal::CertifiedReal(const CertifiedReal& o) : CertifiedReal(o.prec_) {
  mpfr_set(lo_, o.lo_, MPFR_RNDD);
  mpfr_set(hi_, o.hi_, MPFR_RNDU);
}

CertifiedReal::CertifiedReal(CertifiedReal&& o) noexcept : prec_(o.prec_) {
  mpfr_init2(lo_, 2);
  mpfr_init2(hi_, 2);
  mpfr_swap(lo_, o.lo_);
  mpfr_swap(hi_, o.hi_);
}

CertifiedReal& CertifiedReal::operator=(const CertifiedReal& o) {
  if (this != &o) {
    mpfr_set_prec(lo_, o.prec_);
    mpfr_set_prec(hi_, o.prec_);
    prec_ = o.prec_;
    mpfr_set(lo_, o.lo_, MPFR_RNDD);
    mpfr_set(hi_, o.hi_, MPFR_RNDU);
  }
  return *this;
}

CertifiedReal& CertifiedReal::operator=(CertifiedReal&& o) noexcept {
  mpfr_swap(lo_, o.lo_);
  mpfr_swap(hi_, o.hi_);
  std::swap(prec_, o.prec_);
  return *this;
}

CertifiedReal::~CertifiedReal() {
  mpfr_clear(lo_);
  mpfr_clear(hi_);
}

mpfr_prec_t CertifiedReal::join(const CertifiedReal& a, const CertifiedReal& b) {
  return std::max(a.prec_, b.prec_);
}

CertifiedReal CertifiedReal::exact(long v, mpfr_prec_t prec) {
  CertifiedReal r(prec);
  mpfr_set_si(r.lo_, v, MPFR_RNDD);
  mpfr_set_si(r.hi_, v, MPFR_RNDU);
  return r;
}

CertifiedReal CertifiedReal::exact(const BigInt& v) {
  mpfr_prec_t prec =
      std::max<mpfr_prec_t>(kDefaultPrec, mpz_sizeinbase(v.get_mpz_t(), 2) + 1);
  CertifiedReal r(prec);
  mpfr_set_z(r.lo_, v.get_mpz_t(), MPFR_RNDD);
  mpfr_set_z(r.hi_, v.get_mpz_t(), MPFR_RNDU);
  return r;
}

CertifiedReal CertifiedReal::from_rational(const Rational& v, mpfr_prec_t prec) {
  CertifiedReal r(prec);
  mpfr_set_q(r.lo_, v.get_mpq_t(), MPFR_RNDD);
  mpfr_set_q(r.hi_, v.get_mpq_t(), MPFR_RNDU);
  return r;
}

CertifiedReal CertifiedReal::from_endpoints(const Rational& lo, const Rational& hi,
                                            mpfr_prec_t prec) {
  if (lo > hi) throw domain_error("CertifiedReal: lo > hi");
  CertifiedReal r(prec);
  mpfr_set_q(r.lo_, lo.get_mpq_t(), MPFR_RNDD);
  mpfr_set_q(r.hi_, hi.get_mpq_t(), MPFR_RNDU);
  return r;
}

CertifiedReal CertifiedReal::log_of(const BigInt& z, mpfr_prec_t prec) {
  if (z < 1) throw domain_error("log_of needs z >= 1");
  CertifiedReal r(prec);
  mpfr_t t;
  mpfr_init2(t, prec);
  mpfr_set_z(t, z.get_mpz_t(), MPFR_RNDD);
  mpfr_log(r.lo_, t, MPFR_RNDD);
  mpfr_set_z(t, z.get_mpz_t(), MPFR_RNDU);
  mpfr_log(r.hi_, t, MPFR_RNDU);
  mpfr_clear(t);
  return r;
}

CertifiedReal CertifiedReal::pi(mpfr_prec_t prec) {
  CertifiedReal r(prec);
  mpfr_const_pi(r.lo_, MPFR_RNDD);
  mpfr_const_pi(r.hi_, MPFR_RNDU);
  return r;
}

CertifiedReal CertifiedReal::hull(const CertifiedReal& a, const CertifiedReal& b) {
  CertifiedReal r(join(a, b));
  mpfr_min(r.lo_, a.lo_, b.lo_, MPFR_RNDD);
  mpfr_max(r.hi_, a.hi_, b.hi_, MPFR_RNDU);
  return r;
}

Rational CertifiedReal::lower() const { return mpfr_to_rational(lo_); }
Rational CertifiedReal::upper() const { return mpfr_to_rational(hi_); }

Rational CertifiedReal::midpoint() const {
  Rational m = (lower() + upper()) / 2;
  m.canonicalize();
  return m;
}

Rational CertifiedReal::radius() const {
  Rational r = (upper() - lower()) / 2;
  r.canonicalize();
  return r;
}

double CertifiedReal::to_double() const {
  mpfr_t mid;
  mpfr_init2(mid, 64);
  mpfr_add(mid, lo_, hi_, MPFR_RNDN);
  mpfr_div_2ui(mid, mid, 1, MPFR_RNDN);
  double d = mpfr_get_d(mid, MPFR_RNDN);
  mpfr_clear(mid);
  return d;
}

bool CertifiedReal::is_point() const { return mpfr_equal_p(lo_, hi_) != 0; }

CertifiedReal CertifiedReal::operator-() const {
  CertifiedReal r(prec_);
  mpfr_neg(r.lo_, hi_, MPFR_RNDD);
  mpfr_neg(r.hi_, lo_, MPFR_RNDU);
  return r;
}

CertifiedReal CertifiedReal::operator+(const CertifiedReal& o) const {
  CertifiedReal r(join(*this, o));
  mpfr_add(r.lo_, lo_, o.lo_, MPFR_RNDD);
  mpfr_add(r.hi_, hi_, o.hi_, MPFR_RNDU);
  return r;
}

CertifiedReal CertifiedReal::operator-(const CertifiedReal& o) const {
  CertifiedReal r(join(*this, o));
  mpfr_sub(r.lo_, lo_, o.hi_, MPFR_RNDD);
  mpfr_sub(r.hi_, hi_, o.lo_, MPFR_RNDU);
  return r;
}

CertifiedReal CertifiedReal::operator*(const CertifiedReal& o) const {
  CertifiedReal r(join(*this, o));
  mpfr_t c, best;
  mpfr_init2(c, r.prec_);
  mpfr_init2(best, r.prec_);

  const mpfr_srcptr xs[2] = {lo_, hi_};
  const mpfr_srcptr ys[2] = {o.lo_, o.hi_};

  bool first = true;
  for (auto x : xs)
    for (auto y : ys) {
      mpfr_mul(c, x, y, MPFR_RNDD);
      if (first || mpfr_less_p(c, best)) mpfr_set(best, c, MPFR_RNDD);
      first = false;
    }
  mpfr_set(r.lo_, best, MPFR_RNDD);

  first = true;
  for (auto x : xs)
    for (auto y : ys) {
      mpfr_mul(c, x, y, MPFR_RNDU);
      if (first || mpfr_greater_p(c, best)) mpfr_set(best, c, MPFR_RNDU);
      first = false;
    }
  mpfr_set(r.hi_, best, MPFR_RNDU);

  mpfr_clear(c);
  mpfr_clear(best);
  return r;
}

CertifiedReal CertifiedReal::operator/(const CertifiedReal& o) const {
  if (o.contains_zero())
    throw domain_error("CertifiedReal division by interval containing zero");
  CertifiedReal r(join(*this, o));
  mpfr_t c, best;
  mpfr_init2(c, r.prec_);
  mpfr_init2(best, r.prec_);

  const mpfr_srcptr xs[2] = {lo_, hi_};
  const mpfr_srcptr ys[2] = {o.lo_, o.hi_};

  bool first = true;
  for (auto x : xs)
    for (auto y : ys) {
      mpfr_div(c, x, y, MPFR_RNDD);
      if (first || mpfr_less_p(c, best)) mpfr_set(best, c, MPFR_RNDD);
      first = false;
    }
  mpfr_set(r.lo_, best, MPFR_RNDD);

  first = true;
  for (auto x : xs)
    for (auto y : ys) {
      mpfr_div(c, x, y, MPFR_RNDU);
      if (first || mpfr_greater_p(c, best)) mpfr_set(best, c, MPFR_RNDU);
      first = false;
    }
  mpfr_set(r.hi_, best, MPFR_RNDU);

  mpfr_clear(c);
  mpfr_clear(best);
  return r;
}

CertifiedReal CertifiedReal::exp() const {
  CertifiedReal r(prec_);
  mpfr_exp(r.lo_, lo_, MPFR_RNDD);
  mpfr_exp(r.hi_, hi_, MPFR_RNDU);
  return r;
}

CertifiedReal CertifiedReal::log() const {
  if (!is_positive()) throw domain_error("CertifiedReal::log needs lo > 0");
  CertifiedReal r(prec_);
  mpfr_log(r.lo_, lo_, MPFR_RNDD);
  mpfr_log(r.hi_, hi_, MPFR_RNDU);
  return r;
}

CertifiedReal CertifiedReal::log1p() const {
  if (mpfr_cmp_si(lo_, -1) <= 0)
    throw domain_error("CertifiedReal::log1p needs lo > -1");
  CertifiedReal r(prec_);
  mpfr_log1p(r.lo_, lo_, MPFR_RNDD);
  mpfr_log1p(r.hi_, hi_, MPFR_RNDU);
  return r;
}

CertifiedReal CertifiedReal::pow(const CertifiedReal& y) const {
  return (log() * y).exp();
}

CertifiedReal CertifiedReal::int_pow(long k, const CertifiedReal& y) {
  if (k < 1) throw domain_error("int_pow needs k >= 1");
  CertifiedReal r(y.prec_);
  if (k == 1) {
    mpfr_set_si(r.lo_, 1, MPFR_RNDD);
    mpfr_set_si(r.hi_, 1, MPFR_RNDU);
    return r;
  }
  // k^y is increasing in y for k > 1.
  mpfr_t base;
  mpfr_init2(base, r.prec_);
  mpfr_set_si(base, k, MPFR_RNDN);  // exact
  mpfr_pow(r.lo_, base, y.lo_, MPFR_RNDD);
  mpfr_pow(r.hi_, base, y.hi_, MPFR_RNDU);
  mpfr_clear(base);
  return r;
}

CertifiedReal CertifiedReal::abs() const {
  CertifiedReal r(prec_);
  if (mpfr_sgn(lo_) >= 0) return *this;
  if (mpfr_sgn(hi_) <= 0) return -*this;
  mpfr_t nl;
  mpfr_init2(nl, prec_);
  mpfr_neg(nl, lo_, MPFR_RNDU);
  mpfr_set_zero(r.lo_, 1);
  mpfr_max(r.hi_, nl, hi_, MPFR_RNDU);
  mpfr_clear(nl);
  return r;
}

bool CertifiedReal::contains(const Rational& v) const {
  return mpfr_cmp_q(lo_, v.get_mpq_t()) <= 0 &&
         mpfr_cmp_q(hi_, v.get_mpq_t()) >= 0;
}

bool CertifiedReal::contains_zero() const {
  return mpfr_sgn(lo_) <= 0 && mpfr_sgn(hi_) >= 0;
}

bool CertifiedReal::is_positive() const { return mpfr_sgn(lo_) > 0; }

std::optional<BigInt> CertifiedReal::floor_certified() const {
  BigInt flo, fhi;
  mpfr_get_z(flo.get_mpz_t(), lo_, MPFR_RNDD);
  mpfr_get_z(fhi.get_mpz_t(), hi_, MPFR_RNDD);
  if (flo != fhi) return std::nullopt;
  return flo;
}

std::optional<bool> CertifiedReal::less_than(const Rational& r) const {
  if (mpfr_cmp_q(hi_, r.get_mpq_t()) < 0) return true;
  if (mpfr_cmp_q(lo_, r.get_mpq_t()) >= 0) return false;
  return std::nullopt;
}

std::optional<bool> CertifiedReal::greater_than(const Rational& r) const {
  if (mpfr_cmp_q(lo_, r.get_mpq_t()) > 0) return true;
  if (mpfr_cmp_q(hi_, r.get_mpq_t()) <= 0) return false;
  return std::nullopt;
}

std::optional<bool> CertifiedReal::certainly_le(const CertifiedReal& a,
                                                const CertifiedReal& b) {
  if (mpfr_lessequal_p(a.hi_, b.lo_)) return true;
  if (mpfr_greater_p(a.lo_, b.hi_)) return false;
  return std::nullopt;
}

bool CertifiedReal::overlap(const CertifiedReal& a, const CertifiedReal& b) {
  return mpfr_lessequal_p(a.lo_, b.hi_) && mpfr_lessequal_p(b.lo_, a.hi_);
}

}  // namespace cfs
