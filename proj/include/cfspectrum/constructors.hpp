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

#ifndef CFSPECTRUM_CONSTRUCTORS_HPP_
#define CFSPECTRUM_CONSTRUCTORS_HPP_

#include <functional>
#include <string>
#include <vector>

#include "cfspectrum/cfrac.hpp"
#include "cfspectrum/growth.hpp"
#include "cfspectrum/numeric.hpp"
#include "cfspectrum/real.hpp"

namespace cfs {

// Default cap on exponents m in floor(e^m) constructions; e^(10^6) already
// has ~434000 decimal digits.
inline constexpr long kDefaultExponentCap = 1'000'000;

// floor(e^m) for a positive exponent, certified by interval arithmetic:
// the evaluation precision doubles until the enclosure of e^m contains no
// integer boundary. The exponent is re-evaluated at each precision.
BigInt floor_exp_certified(const std::function<Scalar(mpfr_prec_t)>& exponent);

// Certified enclosure of log(floor(e^m)). Small exponents materialize the
// integer; large ones use floor(e^m) in (e^m - 1, e^m], which pins the log
// to within e^-m without ever materializing the value.
CertifiedReal log_floor_exp(const std::function<Scalar(mpfr_prec_t)>& exponent,
                            mpfr_prec_t prec = 192);

// A sequence s_1, s_2, ... of positive integers, with both the values and
// certified logs exposed. Log access stays cheap even where the values
// themselves are too large to materialize.
struct SSeq {
  std::string description;
  std::function<BigInt(long)> value;
  std::function<CertifiedReal(long)> log_value;

  // s_k = floor(e^(psi(k) - psi(k-1))).
  static SSeq from_psi(const GrowthFunction& psi,
                       long exponent_cap = kDefaultExponentCap);
  static SSeq doubly_exponential();  // s_k = 2^(2^k)
  static SSeq constant(BigInt c);
  static SSeq from_values(std::vector<BigInt> values);
};

// The explicit point of E(psi): a_k = floor(e^(psi(k) - psi(k-1) + 1)).
// Requires psi increasing on [1, n]; exponents above the cap raise
// resource_error rather than degrade.
Word point_in_E(const GrowthFunction& psi, long n,
                long exponent_cap = kDefaultExponentCap);

// Certified logs of the same quotients, with no materialization cap.
std::vector<CertifiedReal> point_in_E_log_trace(const GrowthFunction& psi, long n);

struct LevelSetRatio {
  long n = 0;
  CertifiedReal log_sum;  // sum of log a_j, j <= n
  CertifiedReal ratio;    // log_sum / psi(n)
};

// Certified to radius <= 1e-20 (precision escalates as needed).
LevelSetRatio khintchine_ratio(const Word& w, const GrowthFunction& psi, long n);
LevelSetRatio khintchine_ratio(const std::vector<CertifiedReal>& log_quotients,
                               const GrowthFunction& psi, long n);

struct DnMembership {
  Rational epsilon;
  long n = 0;
  bool holds = false;  // 1 - eps < ratio < 1 + eps, both strict
  LevelSetRatio ratio;
};

DnMembership dn_membership(const Word& w, const GrowthFunction& psi,
                           const Rational& epsilon, long n);
DnMembership dn_membership(const std::vector<CertifiedReal>& log_quotients,
                           const GrowthFunction& psi, const Rational& epsilon,
                           long n);

// Uniform draw of a_k from [s_k, ell*s_k - 1] for k = 1..n, deterministic
// in the seed.
Word f_set_sampler(const SSeq& s, long ell, long n, unsigned long seed);
Word f_set_sampler(const SSeq& s, long ell, long n, SeededRng& rng);

// All indices n (1-based, n < order) with a_{n+1} >= q_n^beta. Certified
// interval comparison first; exact integer powers resolve ties.
std::vector<long> jarnik_check(const Word& w, const Rational& beta);

// Extends a word one level while preserving the membership window:
// a_{n+1} = 1 when the log-sum already exceeds (1-eps) psi(n+1), otherwise
// floor(e^psi(n+1) / (a_1 ... a_n)). The floor is provably >= 1 in the
// second case; violations indicate a bug and throw.
BigInt dn_extension(const Word& w, const GrowthFunction& psi,
                    const Rational& epsilon,
                    long exponent_cap = kDefaultExponentCap);

}  // namespace cfs

#endif  // CFSPECTRUM_CONSTRUCTORS_HPP_
