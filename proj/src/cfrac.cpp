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

#include "cfspectrum/cfrac.hpp"

#include <sstream>
#include <utility>

namespace cfs {

Word::Word(std::vector<BigInt> entries) : a_(std::move(entries)) {
  for (const auto& a : a_)
    if (a < 1) throw domain_error("partial quotients must be >= 1");
}

Word Word::of(std::initializer_list<long> entries) {
  std::vector<BigInt> v;
  v.reserve(entries.size());
  for (long a : entries) v.emplace_back(a);
  return Word(std::move(v));
}

void Word::append(BigInt a) {
  if (a < 1) throw domain_error("partial quotients must be >= 1");
  a_.push_back(std::move(a));
}

Word Word::prefix(long n) const {
  if (n < 0 || n > order()) throw domain_error("prefix length out of range");
  return Word(std::vector<BigInt>(a_.begin(), a_.begin() + n));
}

bool Word::canonical() const { return !a_.empty() && a_.back() >= 2; }

std::string Word::to_json() const {
  std::ostringstream os;
  os << '[';
  for (size_t i = 0; i < a_.size(); ++i) {
    if (i) os << ',';
    os << '"' << a_[i].get_str() << '"';
  }
  os << ']';
  return os.str();
}

Word Word::from_json(const std::string& s) {
  std::vector<BigInt> v;
  std::string digits;
  bool in_string = false;
  for (char c : s) {
    if (c == '"') {
      if (in_string) {
        v.push_back(parse_bigint(digits));
        digits.clear();
      }
      in_string = !in_string;
    } else if (in_string) {
      digits += c;
    }
  }
  if (in_string) throw domain_error("unterminated string in word JSON");
  return Word(std::move(v));
}

Word Word::parse_csv(const std::string& s) {
  std::vector<BigInt> v;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (!item.empty()) v.push_back(parse_bigint(item));
  }
  return Word(std::move(v));
}

void ConvergentState::advance(const BigInt& a) {
  if (a < 1) throw domain_error("partial quotients must be >= 1");
  BigInt p = a * p_cur + p_prev;
  BigInt q = a * q_cur + q_prev;
  p_prev = std::move(p_cur);
  q_prev = std::move(q_cur);
  p_cur = std::move(p);
  q_cur = std::move(q);
  ++n;
}

BigInt ConvergentState::determinant() const {
  return p_prev * q_cur - p_cur * q_prev;
}

std::vector<ConvergentState> convergents(const Word& w) {
  if (w.empty()) throw domain_error("convergents of the empty word");
  std::vector<ConvergentState> states;
  states.reserve(w.order());
  ConvergentState st;
  for (const auto& a : w) {
    st.advance(a);
    states.push_back(st);
  }
  return states;
}

ConvergentState final_convergent(const Word& w) {
  if (w.empty()) throw domain_error("convergents of the empty word");
  ConvergentState st;
  for (const auto& a : w) st.advance(a);
  return st;
}

Rational evaluate(const Word& w) {
  ConvergentState st = final_convergent(w);
  Rational r(st.p_cur, st.q_cur);
  r.canonicalize();
  return r;
}

Cylinder cylinder(const Word& w) {
  ConvergentState st = final_convergent(w);
  Rational conv(st.p_cur, st.q_cur);
  Rational mediant(st.p_cur + st.p_prev, st.q_cur + st.q_prev);
  conv.canonicalize();
  mediant.canonicalize();

  Cylinder c;
  c.word = w;
  // x with prefix w is h(theta) = (p_n + theta p_{n-1}) / (q_n + theta q_{n-1})
  // for theta = T^n(x) in [0,1); h is increasing for even n, decreasing for
  // odd n, so the convergent endpoint p_n/q_n is left for even n.
  if (st.n % 2 == 0) {
    c.left = conv;
    c.right = mediant;
  } else {
    c.left = mediant;
    c.right = conv;
  }
  c.diameter = c.right - c.left;
  c.diameter.canonicalize();
  return c;
}

Rational tail_union_diameter(const Word& w, const BigInt& a_min) {
  if (w.empty()) throw domain_error("tail_union_diameter of the empty word");
  if (a_min < 1) throw domain_error("a_min must be >= 1");
  ConvergentState st = final_convergent(w);
  Rational d(1, st.q_cur * (a_min * st.q_cur + st.q_prev));
  d.canonicalize();
  return d;
}

Word gauss_expand(const Rational& x, long max_n) {
  if (max_n < 1) throw domain_error("max_n must be >= 1");
  if (x < 0 || x >= 1) throw domain_error("gauss_expand needs x in [0,1)");
  Word w;
  Rational v = x;
  v.canonicalize();
  while (v != 0 && w.order() < max_n) {
    // 1/v = a + remainder: one Euclidean step.
    BigInt num = v.get_den();
    BigInt den = v.get_num();
    BigInt a;
    mpz_fdiv_q(a.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    w.append(a);
    Rational inv(num, den);
    inv.canonicalize();
    v = inv - Rational(a);
    v.canonicalize();
  }
  return w;
}

Word gauss_expand(const CertifiedReal& x, long max_n) {
  if (max_n < 1) throw domain_error("max_n must be >= 1");
  Rational zero(0), one(1);
  if (x.lower() < zero || !(x.upper() < one))
    throw domain_error("gauss_expand needs the enclosure inside [0,1)");
  Word w;
  CertifiedReal v = x;
  while (w.order() < max_n) {
    // Cannot certify v > 0, so cannot certify whether the expansion has
    // terminated; stop rather than guess.
    if (!v.is_positive()) break;
    CertifiedReal inv = CertifiedReal::exact(1, v.precision()) / v;
    auto a = inv.floor_certified();
    if (!a.has_value()) break;
    if (*a < 1) break;  // enclosure drifted above 1; nothing certifiable
    w.append(*a);
    v = inv - CertifiedReal::exact(*a);
  }
  return w;
}

}  // namespace cfs
