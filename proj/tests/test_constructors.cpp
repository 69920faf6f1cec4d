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

#include "cfspectrum/constructors.hpp"

#include <doctest.h>

#include <cmath>

#include "oracles.hpp"

using cfs::BigInt;
using cfs::CertifiedReal;
using cfs::GrowthFunction;
using cfs::Rational;
using cfs::Scalar;
using cfs::SSeq;
using cfs::Word;

namespace {

GrowthFunction nsq() { return GrowthFunction::polynomial(Rational(2)); }

}  // namespace

TEST_CASE("point_in_E for n^2 starts with the oracle floors") {
  // Exponents psi(k)-psi(k-1)+1 = 2k, so the quotients are floor(e^{2k}).
  Word w = point_in_E(nsq(), 5);
  CHECK(w[0] == oracles::floor_exp(2));
  CHECK(w[1] == oracles::floor_exp(4));
  CHECK(w[2] == oracles::floor_exp(6));
  CHECK(w.prefix(3) == Word::of({7, 54, 403}));
  for (long k = 0; k < w.order(); ++k) CHECK(w[k] >= 2);
}

TEST_CASE("point_in_E rejects non-increasing psi") {
  auto flat = GrowthFunction::table({Rational(5), Rational(5), Rational(6)});
  CHECK_THROWS_AS(point_in_E(flat, 3), cfs::domain_error);
}

TEST_CASE("point_in_E honors the exponent cap") {
  CHECK_THROWS_AS(point_in_E(nsq(), 10, 5), cfs::resource_error);
  // The geometric increments blow past the default cap near k = 21.
  CHECK_THROWS_AS(point_in_E(GrowthFunction::geometric(Rational(2)), 40),
                  cfs::resource_error);
}

TEST_CASE("log trace agrees with the explicit word where both exist") {
  Word w = point_in_E(nsq(), 20);
  auto logs = point_in_E_log_trace(nsq(), 20);
  REQUIRE(logs.size() == 20);
  for (long k = 0; k < 20; ++k) {
    CHECK(logs[k].contains(Rational(0)) == false);
    auto direct = CertifiedReal::log_of(w[k], 192);
    CHECK(CertifiedReal::overlap(logs[k], direct));
  }
}

TEST_CASE("log trace reaches horizons the explicit word cannot") {
  auto logs = point_in_E_log_trace(GrowthFunction::geometric(Rational(2)), 40);
  REQUIRE(logs.size() == 40);
  // log a_40 = 2^39 + 1 up to a vanishing floor correction.
  double expected = std::pow(2.0, 39.0) + 1.0;
  CHECK(logs[39].to_double() == doctest::Approx(expected).epsilon(1e-12));
}

TEST_CASE("khintchine_ratio examples") {
  // All ones: log sum is exactly zero.
  Word ones = Word::of({1, 1, 1, 1});
  auto r = khintchine_ratio(ones, nsq(), 4);
  CHECK(r.ratio.contains(Rational(0)));
  CHECK(r.log_sum.contains(Rational(0)));

  // Frozen example: (log 7 + log 54 + log 403)/9.
  Word w = Word::of({7, 54, 403});
  auto r2 = khintchine_ratio(w, nsq(), 3);
  double expected = (std::log(7.0) + std::log(54.0) + std::log(403.0)) / 9.0;
  CHECK(r2.ratio.to_double() == doctest::Approx(expected).epsilon(1e-12));
  CHECK(r2.ratio.to_double() == doctest::Approx(1.3259).epsilon(1e-3));
  CHECK(r2.ratio.radius() < Rational(1, BigInt(1) << 66));

  // Construction at n = 50 lands in [1, 1.03].
  auto r3 = khintchine_ratio(point_in_E(nsq(), 50), nsq(), 50);
  CHECK(r3.ratio.lower() >= 1);
  CHECK(r3.ratio.upper() <= Rational(103, 100));
}

TEST_CASE("khintchine_ratio certified error stays below 1e-20") {
  Word w = point_in_E(nsq(), 60);
  auto r = khintchine_ratio(w, nsq(), 60);
  CHECK(r.ratio.radius() <= Rational(1, BigInt(1) << 66));
}

TEST_CASE("dn_membership examples") {
  Word ones = Word::of({1, 1, 1});
  CHECK(!dn_membership(ones, nsq(), Rational(1, 2), 3).holds);

  Word w = point_in_E(nsq(), 100);
  CHECK(dn_membership(w, nsq(), Rational(1, 10), 100).holds);

  // A single huge quotient pushes the ratio near 3.
  BigInt huge = oracles::floor_exp(27);  // e^{3 psi(3)} with psi = n^2
  Word spike(std::vector<BigInt>{huge, BigInt(1), BigInt(1)});
  auto m = dn_membership(spike, nsq(), Rational(1, 2), 3);
  CHECK(!m.holds);
  CHECK(m.ratio.ratio.to_double() == doctest::Approx(3.0).epsilon(1e-2));

  CHECK_THROWS_AS(dn_membership(ones, nsq(), Rational(2), 3), cfs::domain_error);
}

TEST_CASE("f_set_sampler obeys its constraints deterministically") {
  // s_k = 1, ell = 2 forces the all-ones word.
  Word ones = f_set_sampler(SSeq::constant(BigInt(1)), 2, 8, 42);
  for (long k = 0; k < 8; ++k) CHECK(ones[k] == 1);

  SSeq s = SSeq::from_psi(nsq());
  Word w1 = f_set_sampler(s, 2, 5, 42);
  Word w2 = f_set_sampler(s, 2, 5, 42);
  Word w3 = f_set_sampler(s, 2, 5, 43);
  CHECK(w1 == w2);
  CHECK(!(w1 == w3));
  for (long k = 1; k <= 5; ++k) {
    BigInt sk = s.value(k);
    CHECK(w1[k - 1] >= sk);
    CHECK(w1[k - 1] < 2 * sk);
    CHECK(w3[k - 1] >= sk);
    CHECK(w3[k - 1] < 2 * sk);
  }

  auto r = khintchine_ratio(w1, nsq(), 5);
  CHECK(r.ratio.to_double() > 0.8);
  CHECK(r.ratio.to_double() < 1.2);

  CHECK_THROWS_AS(f_set_sampler(s, 1, 5, 42), cfs::domain_error);
}

TEST_CASE("f_set_sampler ratios satisfy the analytic window bound") {
  // |ratio(n) - 1| <= (n log 2 + n)/psi(n): every quotient sits within a
  // factor 2 of e^(psi(k)-psi(k-1)), plus the floor corrections.
  SSeq s = SSeq::from_psi(nsq());
  for (unsigned long seed = 100; seed < 110; ++seed) {
    long n = 12;
    Word w = f_set_sampler(s, 2, n, seed);
    auto r = khintchine_ratio(w, nsq(), n);
    Rational bound =
        (Rational(7, 10) * n + n) / (Rational(n) * Rational(n));
    CHECK((r.ratio - CertifiedReal::exact(1L)).abs().upper() <= bound);
  }
}

TEST_CASE("jarnik_check worked examples") {
  CHECK(jarnik_check(Word::of({1, 1}), Rational(1)) == std::vector<long>{1});
  CHECK(jarnik_check(Word::of({1, 2}), Rational(2)) == std::vector<long>{1});
  CHECK(jarnik_check(Word::of({2, 3, 100}), Rational(1)) ==
        std::vector<long>{1, 2});
  CHECK_THROWS_AS(jarnik_check(Word::of({2}), Rational(1)), cfs::domain_error);
  CHECK_THROWS_AS(jarnik_check(Word::of({1, 1}), Rational(0)), cfs::domain_error);
}

TEST_CASE("jarnik_check exact tie resolution") {
  // q_1 = 2 for the word [2]; a_2 = 4 sits exactly on q^2.
  CHECK(jarnik_check(Word::of({2, 4}), Rational(2)) == std::vector<long>{1});
  CHECK(jarnik_check(Word::of({2, 3}), Rational(2)) == std::vector<long>{});
  // Half-integer exponent: q^(1/2) with q_1 = 4 ties at a_2 = 2.
  CHECK(jarnik_check(Word::of({4, 2}), Rational(1, 2)) == std::vector<long>{1});
}

TEST_CASE("jarnik_check with tiny beta accepts every index of a >=2 word") {
  Word w = Word::of({3, 5, 2, 9, 4, 2, 8});
  auto st = final_convergent(w);
  size_t bits = mpz_sizeinbase(st.q_cur.get_mpz_t(), 2);
  Rational beta(1, BigInt(bits + 1));
  auto hits = jarnik_check(w, beta);
  CHECK(hits.size() == static_cast<size_t>(w.order() - 1));
}

TEST_CASE("dn_extension covers both branches") {
  auto psi = nsq();
  // Spiked word: log sum already exceeds (1-eps) psi(n+1), so extend by 1.
  Word spike(std::vector<BigInt>{oracles::floor_exp(40)});
  CHECK(dn_extension(spike, psi, Rational(1, 2)) == 1);

  // Balanced word: the floor branch keeps the window.
  Word w = point_in_E(psi, 8);
  BigInt a = dn_extension(w, psi, Rational(1, 2));
  CHECK(a >= 1);
  Word extended = w;
  extended.append(a);
  CHECK(dn_membership(extended, psi, Rational(1, 2), 9).holds);
}

TEST_CASE("sseq value and log agree on materializable ranges") {
  SSeq s = SSeq::from_psi(nsq());
  for (long k = 1; k <= 10; ++k) {
    BigInt v = s.value(k);
    CHECK(v == oracles::floor_exp(2 * k - 1));
    CHECK(s.log_value(k).contains(Rational(0)) == false);
    CHECK(CertifiedReal::overlap(s.log_value(k), CertifiedReal::log_of(v, 192)));
  }
  SSeq d = SSeq::doubly_exponential();
  CHECK(d.value(3) == 256);
  CHECK(d.log_value(3).to_double() == doctest::Approx(8 * std::log(2.0)));
  CHECK_THROWS_AS(d.value(30), cfs::resource_error);
}
