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

#include "cfspectrum/growth.hpp"

#include <doctest.h>

#include <cmath>

using cfs::limsup_ratio;
using cfs::superlinearity_check;
using cfs::increasing_equivalence_check;
using cfs::GrowthFunction;
using cfs::Rational;
using cfs::Scalar;

namespace {

// n * ceil(log(n+1)) with the ceiling taken on double logs; the values are
// far from integer boundaries over the tested range.
GrowthFunction n_log_n() {
  return GrowthFunction::expression("n*ceil(log(n+1))", [](long n, mpfr_prec_t) {
    long c = static_cast<long>(std::ceil(std::log(static_cast<double>(n) + 1.0)));
    return Scalar::exact(Rational(n) * Rational(std::max(c, 1L)));
  });
}

}  // namespace

TEST_CASE("preset evaluation is exact") {
  auto nsq = GrowthFunction::polynomial(Rational(2));
  CHECK(nsq(7).rational() == 49);
  CHECK(nsq(0).rational() == 0);  // psi(0) = 0 convention
  CHECK(nsq.increment(1).rational() == 1);

  auto geo = GrowthFunction::geometric(Rational(3), Rational(2));
  CHECK(geo(4).rational() == 162);  // 2*3^4

  auto fb = GrowthFunction::factorial_block();
  CHECK(fb(1).rational() == 6);     // k=1: 3!
  CHECK(fb(2).rational() == 24);    // k=2 block [2,6): 4!
  CHECK(fb(5).rational() == 24);
  CHECK(fb(6).rational() == 120);   // k=3 block [6,24): 5!
  CHECK(fb(23).rational() == 120);
  CHECK(fb(24).rational() == 720);

  CHECK_THROWS_AS(GrowthFunction::polynomial(Rational(0)), cfs::domain_error);
  CHECK_THROWS_AS(GrowthFunction::geometric(Rational(1)), cfs::domain_error);
  CHECK_THROWS_AS(GrowthFunction::table({Rational(1), Rational(0)}), cfs::domain_error);
}

TEST_CASE("non-integer polynomial exponents evaluate as enclosures") {
  auto p = GrowthFunction::polynomial(Rational(5, 2));
  auto v = p(4);  // 4^2.5 = 32
  CHECK(!v.is_exact());
  CHECK(v.enclosure().contains(Rational(32)));
}

TEST_CASE("limsup diagnostic: geometric is exact at every horizon") {
  auto geo = GrowthFunction::geometric(Rational(2));
  auto diag = limsup_ratio(geo, 100, {10, 40});
  CHECK(diag.b_hat.is_exact());
  CHECK(diag.b_hat.rational() == 2);
  CHECK(!diag.divergence_flag);
  // window maxima are non-increasing in the tail start
  CHECK(diag.window_maxima[0].compare(diag.window_maxima[1]) >= 0);
}

TEST_CASE("limsup diagnostic: polynomial ratios trend to 1") {
  auto nsq = GrowthFunction::polynomial(Rational(2));
  auto diag = limsup_ratio(nsq, 10000, {1000});
  CHECK(diag.b_hat.is_exact());
  CHECK(diag.b_hat.rational() == Rational(1001, 1000) * Rational(1001, 1000));
  CHECK(diag.b_hat.to_double() == doctest::Approx(1.002).epsilon(1e-3));
  CHECK(!diag.divergence_flag);
}

TEST_CASE("limsup diagnostic: factorial blocks flag divergence at 7!") {
  auto fb = GrowthFunction::factorial_block();
  auto diag = limsup_ratio(fb, 5040, {100, 1000});
  CHECK(diag.divergence_flag);
  // The ratio at the end of the block k!<=n<(k+1)! equals k+3.
  CHECK(diag.records.back().second == doctest::Approx(9.0));
  CHECK(diag.b_hat.to_double() == doctest::Approx(9.0));
}

TEST_CASE("limsup window maxima are non-increasing in the tail start") {
  auto fb = GrowthFunction::factorial_block();
  auto diag = limsup_ratio(fb, 720, {1, 10, 50, 200});
  for (size_t i = 1; i < diag.window_maxima.size(); ++i)
    CHECK(diag.window_maxima[i - 1].compare(diag.window_maxima[i]) >= 0);
}

TEST_CASE("limsup preconditions") {
  auto nsq = GrowthFunction::polynomial(Rational(2));
  CHECK_THROWS_AS(limsup_ratio(nsq, 10, {9}), cfs::domain_error);
  CHECK_THROWS_AS(limsup_ratio(nsq, 100, {}), cfs::domain_error);
}

TEST_CASE("superlinearity diagnostic") {
  CHECK(superlinearity_check(GrowthFunction::polynomial(Rational(2)), 1000).passed);
  // Linear growth has a constant slope and must fail.
  auto linear = GrowthFunction::expression("3n", [](long n, mpfr_prec_t) {
    return Scalar::exact(Rational(3 * n));
  });
  auto rep = superlinearity_check(linear, 1000);
  CHECK(!rep.passed);
  CHECK(rep.last_half_min.rational() == 3);
  CHECK(superlinearity_check(n_log_n(), 1000).passed);
  CHECK_THROWS_AS(superlinearity_check(linear, 5), cfs::domain_error);
}

TEST_CASE("increasing equivalence diagnostic") {
  // Any increasing function: deviation exactly zero.
  auto rep = increasing_equivalence_check(GrowthFunction::polynomial(Rational(2)),
                                          1000, 1e-2);
  CHECK(rep.equivalent);
  CHECK(rep.sup_deviation == 0.0);

  // n^2 on even, n on odd: the envelope ratio collapses.
  auto mixed = GrowthFunction::expression("n^2 even / n odd", [](long n, mpfr_prec_t) {
    return Scalar::exact(n % 2 == 0 ? Rational(n) * Rational(n) : Rational(n));
  });
  auto rep2 = increasing_equivalence_check(mixed, 1000, 1e-2);
  CHECK(!rep2.equivalent);
  CHECK(rep2.sup_deviation == doctest::Approx(1.0).epsilon(1e-2));

  // n^2 + (-1)^n is within O(1) of its envelope.
  auto wobble = GrowthFunction::expression("n^2+(-1)^n", [](long n, mpfr_prec_t) {
    Rational v = Rational(n) * Rational(n) + (n % 2 == 0 ? 1 : -1);
    if (v < 1) v = 1;
    return Scalar::exact(v);
  });
  auto rep3 = increasing_equivalence_check(wobble, 1000, 1e-2);
  CHECK(rep3.equivalent);
}

TEST_CASE("factorial block is non-decreasing, so equivalent to increasing") {
  auto rep = increasing_equivalence_check(GrowthFunction::factorial_block(), 720, 1e-6);
  CHECK(rep.equivalent);
  CHECK(rep.sup_deviation == 0.0);
}

TEST_CASE("table growth function") {
  auto t = GrowthFunction::table({Rational(2), Rational(5), Rational(9)});
  CHECK(t(2).rational() == 5);
  CHECK_THROWS_AS(t(4), cfs::domain_error);
}

TEST_CASE("limsup witness indices") {
  // Factorial blocks: the ratio k+3 appears at n = (k+1)! - 1, and those
  // positions are far below eps psi(n).
  auto fb = GrowthFunction::factorial_block();
  auto hits = limsup_witness_indices(fb, 5040, Rational(3, 10),
                                     Scalar::exact(Rational(9)));
  CHECK(hits == std::vector<long>{119, 719, 5039});

  // Geometric growth: every late-enough index witnesses b = 2.
  auto geo = GrowthFunction::geometric(Rational(2));
  auto hits2 = limsup_witness_indices(geo, 40, Rational(1, 10),
                                      Scalar::exact(Rational(2)));
  REQUIRE(!hits2.empty());
  // n <= 2^n/10 first holds at n = 6.
  CHECK(hits2.front() == 6);
  CHECK(hits2.back() == 39);
  CHECK(hits2.size() == 34);
}

TEST_CASE("every monotone table is equivalent with deviation exactly zero") {
  cfs::SeededRng rng(23);
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<Rational> vals;
    Rational cur(1);
    for (int n = 0; n < 50; ++n) {
      cur += Rational(rng.range(0, cfs::BigInt(100)), 7);
      vals.push_back(cur);
    }
    auto rep = increasing_equivalence_check(GrowthFunction::table(vals), 50, 1e-9);
    CHECK(rep.equivalent);
    CHECK(rep.sup_deviation == 0.0);
  }
}
