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

#include "cfspectrum/dimension.hpp"

#include <doctest.h>

#include <cmath>

#include "cfspectrum/verify.hpp"

using cfs::box_counting;
using cfs::jarnik_bounds;
using cfs::beta_exponent;
using cfs::lemma31_dimension;
using cfs::covering_sum_trace;
using cfs::sample_f_points;
using cfs::fast_khintchine_dimension;
using cfs::BigInt;
using cfs::GrowthFunction;
using cfs::Rational;
using cfs::Scalar;
using cfs::SSeq;

TEST_CASE("lemma31 on the doubly exponential family") {
  auto est = lemma31_dimension(SSeq::doubly_exponential(), 30);
  // Exact ratio oracle: (2^{n+1}-2)/(3*2^{n+1}-4) at the tail minimum n=15.
  double oracle = (std::pow(2.0, 16) - 2) / (3 * std::pow(2.0, 16) - 4);
  CHECK(est.value.to_double() == doctest::Approx(oracle).epsilon(1e-9));
  CHECK(std::fabs(est.value.to_double() - 1.0 / 3.0) <= 1e-3);
  CHECK(est.trend.size() == 30);
}

TEST_CASE("lemma31 on psi-derived families") {
  auto nsq = GrowthFunction::polynomial(Rational(2));
  auto est = lemma31_dimension(SSeq::from_psi(nsq), 200);
  // Tail minimum sits at n = 100: 10000/(20000+201) plus floor slack.
  CHECK(est.value.to_double() == doctest::Approx(10000.0 / 20201.0).epsilon(1e-3));
  CHECK(std::fabs(est.value.to_double() - 0.5) <= 1e-2);

  auto pow2 = GrowthFunction::geometric(Rational(2));
  auto est2 = lemma31_dimension(SSeq::from_psi(pow2), 200);
  CHECK(std::fabs(est2.value.to_double() - 1.0 / 3.0) <= 1e-2);
}

TEST_CASE("lemma31 rejects families violating the growth hypothesis") {
  CHECK_THROWS_AS(lemma31_dimension(SSeq::constant(BigInt(5)), 50),
                  cfs::domain_error);
}

TEST_CASE("theorem11 closed forms") {
  auto d1 = fast_khintchine_dimension(GrowthFunction::polynomial(Rational(2)), 100);
  CHECK(d1.value.is_exact());
  CHECK(d1.value.rational() == Rational(1, 2));
  CHECK(!d1.empty_set);
  CHECK(d1.diagnostics_ok);

  auto d2 = fast_khintchine_dimension(GrowthFunction::geometric(Rational(3)), 100);
  CHECK(d2.value.rational() == Rational(1, 4));

  auto d3 = fast_khintchine_dimension(GrowthFunction::factorial_block(), 720);
  CHECK(d3.value.rational() == 0);
  CHECK(d3.b_infinite);
  CHECK(!d3.empty_set);
}

TEST_CASE("theorem11 on a non-preset table") {
  std::vector<Rational> vals;
  for (long n = 1; n <= 120; ++n) vals.push_back(Rational(n) * Rational(n));
  auto est = fast_khintchine_dimension(GrowthFunction::table(std::move(vals)), 100);
  CHECK(!est.empty_set);
  // b_hat is the tail-window maximum ((h/2+1)/(h/2))^2, not the true limit.
  CHECK(est.value.to_double() > 0.45);
  CHECK(est.value.to_double() <= 0.5);
}

TEST_CASE("theorem11 empty-set flag") {
  auto mixed = GrowthFunction::expression("n^2 even / n odd", [](long n, mpfr_prec_t) {
    return Scalar::exact(n % 2 == 0 ? Rational(n) * Rational(n) : Rational(n));
  });
  auto est = fast_khintchine_dimension(mixed, 100);
  CHECK(est.empty_set);
  CHECK(est.value.rational() == 0);
}

TEST_CASE("theorem11 flags failed superlinearity diagnostics") {
  auto linear = GrowthFunction::expression("3n", [](long n, mpfr_prec_t) {
    return Scalar::exact(Rational(3 * n));
  });
  auto est = fast_khintchine_dimension(linear, 100);
  CHECK(!est.diagnostics_ok);
}

TEST_CASE("jarnik bounds") {
  auto [u2, s2] = jarnik_bounds(Rational(2));
  CHECK(u2 == Rational(1, 2));
  CHECK(s2 == Rational(1, 4));
  auto [u1, s1] = jarnik_bounds(Rational(1));
  CHECK(u1 == Rational(2, 3));
  CHECK(s1 == Rational(1, 3));
  auto [u0, s0] = jarnik_bounds(Rational(1, 1000));
  CHECK(u0 == Rational(2000, 2001));
  CHECK(s0 == Rational(1000, 2001));
  for (const Rational& b : {Rational(1, 2), Rational(1), Rational(2), Rational(10)}) {
    auto [u, s] = jarnik_bounds(b);
    CHECK(s * 2 == u);
  }
  CHECK_THROWS_AS(jarnik_bounds(Rational(0)), cfs::domain_error);
  CHECK_THROWS_AS(jarnik_bounds(Rational(-1)), cfs::domain_error);
}

TEST_CASE("beta exponent arithmetic") {
  // b = 3, eps -> 0: beta -> 2 and the induced bound -> 1/4 = 1/(1+b).
  auto r = beta_exponent(Rational(3), Rational(1, 1000000));
  CHECK(std::fabs(r.beta.get_d() - 2.0) < 1e-4);
  CHECK(std::fabs(r.induced_bound.get_d() - 0.25) < 1e-4);
  CHECK(r.positive);

  auto flagged = beta_exponent(Rational(1), Rational(1, 10));
  CHECK(!flagged.positive);
  CHECK(flagged.beta < 0);

  auto mid = beta_exponent(Rational(2), Rational(1, 100));
  CHECK(std::fabs(mid.beta.get_d() - 0.931) < 2e-3);

  // Richardson-style trend of the induced bound toward 1/(1+b).
  for (const Rational& b : {Rational(2), Rational(3)}) {
    Rational target = Rational(1) / (Rational(1) + b);
    Rational prev(-1);
    for (const Rational& eps :
         {Rational(1, 100), Rational(1, 10000), Rational(1, 1000000)}) {
      Rational gap = beta_exponent(b, eps).induced_bound - target;
      if (gap < 0) gap = -gap;
      if (prev >= 0) CHECK(gap < prev);
      prev = gap;
    }
  }
}

TEST_CASE("covering trace dichotomy around the critical exponent") {
  SSeq s = SSeq::doubly_exponential();
  auto above = covering_sum_trace(s, 2, Rational(1, 3) + Rational(1, 20), 20);
  CHECK(above.upper_tail_decreasing);
  auto below = covering_sum_trace(s, 2, Rational(1, 3) - Rational(1, 20), 20);
  CHECK(below.lower_tail_increasing);
}

TEST_CASE("covering trace on the single-choice family") {
  // (ell-1) s_k = 1 everywhere: one cylinder per level, strictly shrinking.
  auto trace = covering_sum_trace(SSeq::constant(BigInt(1)), 2, Rational(1, 2), 12);
  for (size_t i = 1; i < trace.levels.size(); ++i)
    CHECK(trace.levels[i].log_upper < trace.levels[i - 1].log_upper);
  CHECK(trace.levels.back().log_upper < 0);
}

TEST_CASE("box counting on uniform points") {
  cfs::SeededRng rng(99);
  std::vector<Rational> pts;
  for (int i = 0; i < 10000; ++i) pts.push_back(rng.unit_rational(53));
  auto res = box_counting(pts, {2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12});
  CHECK(res.estimate.value.to_double() >= 0.95);
  CHECK(res.estimate.value.to_double() <= 1.0);
}

TEST_CASE("box counting recovers the Cantor dimension") {
  auto pts = cfs::cantor_points(12);
  REQUIRE(pts.size() == 4096);
  auto res = box_counting(pts, {2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12});
  double target = std::log(2.0) / std::log(3.0);
  CHECK(std::fabs(res.estimate.value.to_double() - target) <= 0.05);
}

TEST_CASE("box counting input validation") {
  std::vector<Rational> few(10, Rational(1, 2));
  CHECK_THROWS_AS(box_counting(few, {2, 4, 8, 12}), cfs::domain_error);
  std::vector<Rational> many(2000, Rational(1, 3));
  CHECK_THROWS_AS(box_counting(many, {2, 12}), cfs::domain_error);
  CHECK_THROWS_AS(box_counting(many, {2, 3, 4, 5}), cfs::domain_error);
  std::vector<Rational> bad(2000, Rational(3, 2));
  CHECK_THROWS_AS(box_counting(bad, {2, 4, 8, 12}), cfs::domain_error);
}

TEST_CASE("f-point samples are deterministic rationals in (0,1)") {
  SSeq s = SSeq::doubly_exponential();
  auto a = sample_f_points(s, 2, 4, 50, 7);
  auto b = sample_f_points(s, 2, 4, 50, 7);
  REQUIRE(a.size() == 50);
  CHECK(a == b);
  for (const auto& x : a) {
    CHECK(x > 0);
    CHECK(x < 1);
  }
}
