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

#include "cfspectrum/numeric.hpp"

#include <cctype>

namespace cfs {

std::string to_fraction(const Rational& r) {
  Rational c = r;
  c.canonicalize();
  return c.get_num().get_str() + "/" + c.get_den().get_str();
}

Rational parse_fraction(const std::string& s) {
  if (s.empty()) throw domain_error("empty rational literal");
  auto slash = s.find('/');
  if (slash != std::string::npos) {
    Rational r;
    if (r.set_str(s, 10) != 0) throw domain_error("bad rational literal: " + s);
    if (r.get_den() == 0) throw domain_error("zero denominator: " + s);
    r.canonicalize();
    return r;
  }
  auto dot = s.find('.');
  if (dot != std::string::npos) {
    std::string digits = s.substr(0, dot) + s.substr(dot + 1);
    if (digits.empty() || digits == "-" || digits == "+")
      throw domain_error("bad decimal literal: " + s);
    for (size_t i = 0; i < digits.size(); ++i) {
      if (i == 0 && (digits[i] == '-' || digits[i] == '+')) continue;
      if (!std::isdigit(static_cast<unsigned char>(digits[i])))
        throw domain_error("bad decimal literal: " + s);
    }
    BigInt num(digits, 10);
    BigInt den;
    mpz_ui_pow_ui(den.get_mpz_t(), 10, s.size() - dot - 1);
    Rational r(num, den);
    r.canonicalize();
    return r;
  }
  Rational r;
  if (r.set_str(s + "/1", 10) != 0) throw domain_error("bad integer literal: " + s);
  r.canonicalize();
  return r;
}

std::string to_decimal(const BigInt& z) { return z.get_str(); }

BigInt parse_bigint(const std::string& s) {
  if (s.empty()) throw domain_error("empty integer literal");
  BigInt z;
  if (mpz_set_str(z.get_mpz_t(), s.c_str(), 10) != 0)
    throw domain_error("bad integer literal: " + s);
  return z;
}

SeededRng::SeededRng(unsigned long seed) : state_(gmp_randinit_mt) {
  state_.seed(seed);
}

BigInt SeededRng::below(const BigInt& n) {
  if (n < 1) throw domain_error("SeededRng::below needs n >= 1");
  return state_.get_z_range(n);
}

BigInt SeededRng::range(const BigInt& lo, const BigInt& hi) {
  if (lo > hi) throw domain_error("SeededRng::range needs lo <= hi");
  return lo + below(hi - lo + 1);
}

long SeededRng::range_long(long lo, long hi) {
  return static_cast<long>(range(BigInt(lo), BigInt(hi)).get_si());
}

Rational SeededRng::unit_rational(unsigned bits) {
  BigInt k = state_.get_z_bits(bits);
  BigInt den;
  mpz_ui_pow_ui(den.get_mpz_t(), 2, bits);
  Rational r(k, den);
  r.canonicalize();
  return r;
}

}  // namespace cfs
