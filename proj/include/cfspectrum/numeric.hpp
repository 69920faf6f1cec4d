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

#ifndef CFSPECTRUM_NUMERIC_HPP_
#define CFSPECTRUM_NUMERIC_HPP_

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <vector>

namespace cfs {

// All integer arithmetic in this library is arbitrary precision.
// Denominators q_n grow doubly exponentially for the growth functions we
// care about, so fixed-width integers are never acceptable.
using BigInt = mpz_class;
using Rational = mpq_class;

// Input outside the mathematical domain of an operation (x not in [0,1),
// t <= 1, non-increasing psi where increase is required, ...).
class domain_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Result would be materializable only beyond the configured resource caps
// (e.g. a partial quotient with hundreds of millions of digits).
class resource_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Adaptive precision failed to decide a certified comparison.
class precision_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Serializes as "p/q" with q > 0 and gcd(p, q) = 1, e.g. "5/7", "0/1".
std::string to_fraction(const Rational& r);

// Accepts "p/q", a bare integer "p", or a plain decimal like "0.25".
Rational parse_fraction(const std::string& s);

std::string to_decimal(const BigInt& z);
BigInt parse_bigint(const std::string& s);

// Deterministic sampler for arbitrary-precision values. Same seed, same
// stream, on every platform (GMP's Mersenne twister).
class SeededRng {
 public:
  explicit SeededRng(unsigned long seed);

  // Uniform in [0, n); requires n >= 1.
  BigInt below(const BigInt& n);
  // Uniform in [lo, hi] inclusive; requires lo <= hi.
  BigInt range(const BigInt& lo, const BigInt& hi);
  long range_long(long lo, long hi);
  // Dyadic rational k/2^bits, uniform over k in [0, 2^bits).
  Rational unit_rational(unsigned bits);

 private:
  gmp_randclass state_;
};

}  // namespace cfs

#endif  // CFSPECTRUM_NUMERIC_HPP_
