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

#ifndef CFSPECTRUM_CFRAC_HPP_
#define CFSPECTRUM_CFRAC_HPP_

#include <vector>

#include "cfspectrum/numeric.hpp"
#include "cfspectrum/real.hpp"

namespace cfs {

// A finite word of partial quotients (a_1, ..., a_n); every entry >= 1.
class Word {
 public:
  Word() = default;
  explicit Word(std::vector<BigInt> entries);

  static Word of(std::initializer_list<long> entries);

  long order() const { return static_cast<long>(a_.size()); }
  bool empty() const { return a_.empty(); }
  const BigInt& operator[](size_t i) const { return a_[i]; }  // a_{i+1}
  const std::vector<BigInt>& entries() const { return a_; }
  auto begin() const { return a_.begin(); }
  auto end() const { return a_.end(); }

  void append(BigInt a);
  Word prefix(long n) const;
  // The canonical finite expansions: nonempty with last quotient >= 2.
  bool canonical() const;

  // JSON array of decimal strings, e.g. ["1","2","2"].
  std::string to_json() const;
  static Word from_json(const std::string& s);
  // Comma-separated decimal entries, e.g. "1,2,2".
  static Word parse_csv(const std::string& s);

  friend bool operator==(const Word&, const Word&) = default;

 private:
  std::vector<BigInt> a_;
};

// Numerator/denominator state of the convergent recursion
//   p_n = a_n p_{n-1} + p_{n-2},  q_n = a_n q_{n-1} + q_{n-2}
// with p_0 = q_{-1} = 0 and p_{-1} = q_0 = 1.
struct ConvergentState {
  long n = 0;
  BigInt p_prev{1};  // p_{n-1}
  BigInt q_prev{0};  // q_{n-1}
  BigInt p_cur{0};   // p_n
  BigInt q_cur{1};   // q_n

  void advance(const BigInt& a);
  // p_{n-1} q_n - p_n q_{n-1}; equals (-1)^n.
  BigInt determinant() const;
};

// States after each of the n steps (k = 1..n). Requires a nonempty word.
std::vector<ConvergentState> convergents(const Word& w);
ConvergentState final_convergent(const Word& w);

// p_n/q_n in lowest terms. Requires a nonempty word.
Rational evaluate(const Word& w);

// The order-n cylinder as the half-open interval [left, right); its points
// are exactly the reals whose expansion starts with the word, up to the
// countably many rationals sitting on cylinder boundaries.
struct Cylinder {
  Word word;
  Rational left;
  Rational right;
  Rational diameter;  // right - left = 1/(q_n (q_n + q_{n-1}))
};
Cylinder cylinder(const Word& w);

// Exact diameter of the union of all child cylinders I_{n+1}(w.a) over
// a >= a_min: the distance from p_n/q_n to the a_min-th child endpoint,
//   1 / (q_n (a_min q_n + q_{n-1})).
Rational tail_union_diameter(const Word& w, const BigInt& a_min);

// Continued fraction expansion of a rational x in [0,1). Terminates with
// the canonical form (last quotient >= 2); x = 0 yields the empty word.
// Emits at most max_n quotients.
Word gauss_expand(const Rational& x, long max_n);

// Expansion of a certified real in [0,1). Every emitted quotient is
// certified: the whole uncertainty interval lies inside one first-level
// cylinder at each step. Stops early once that certification fails.
Word gauss_expand(const CertifiedReal& x, long max_n);

}  // namespace cfs

#endif  // CFSPECTRUM_CFRAC_HPP_
