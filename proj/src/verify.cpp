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

#include "cfspectrum/verify.hpp"

#include <cmath>
#include <sstream>

#include "cfspectrum/cfrac.hpp"
#include "cfspectrum/constructors.hpp"
#include "cfspectrum/dimension.hpp"
#include "cfspectrum/growth.hpp"
#include "cfspectrum/measures.hpp"

namespace cfs {

long SuiteReport::trials() const {
  long t = 0;
  for (const auto& c : checks) t += c.trials;
  return t;
}

long SuiteReport::failures() const {
  long f = 0;
  for (const auto& c : checks) f += c.failures;
  return f;
}

namespace {

class Check {
 public:
  explicit Check(std::string name) { result_.name = std::move(name); }

  void expect(bool ok, const std::string& detail) {
    ++result_.trials;
    if (!ok) {
      ++result_.failures;
      if (result_.messages.size() < 5) result_.messages.push_back(detail);
    }
  }

  CheckResult take() { return std::move(result_); }

 private:
  CheckResult result_;
};

Word random_word(SeededRng& rng, long max_len, const BigInt& max_entry) {
  long len = rng.range_long(1, max_len);
  Word w;
  for (long i = 0; i < len; ++i) w.append(rng.range(1, max_entry));
  return w;
}

std::string word_tag(const Word& w) {
  std::string s = w.to_json();
  if (s.size() > 60) s = s.substr(0, 57) + "...";
  return s;
}

}  // namespace

SuiteReport verify_identities(long depth, long trials, unsigned long seed) {
  SeededRng rng(seed);
  Check det("determinant_identity");
  Check qbound("q_lower_bound");
  Check prod("product_bounds");
  Check diam("diameter_formula_and_bounds");
  Check nest("cylinder_nesting");
  Check cover("level1_covering_identity");
  Check qsum("q_square_sum_bracket");

  const BigInt max_entry = 1000000;
  for (long t = 0; t < trials; ++t) {
    Word w = random_word(rng, depth, max_entry);
    ConvergentState st;
    BigInt prod_a = 1;
    BigInt pow2 = 1;
    Rational prev_left, prev_right;
    for (long n = 1; n <= w.order(); ++n) {
      st.advance(w[n - 1]);
      prod_a *= w[n - 1];
      pow2 *= 2;

      BigInt d = st.determinant();
      det.expect(d == ((n % 2 == 0) ? 1 : -1),
                 "det != (-1)^n at n=" + std::to_string(n) + " for " + word_tag(w));

      // q_n >= 2^((n-1)/2)  <=>  q_n^2 >= 2^(n-1).
      qbound.expect(st.q_cur * st.q_cur >= (BigInt(1) << (n - 1)),
                    "q_n below 2^((n-1)/2) at n=" + std::to_string(n));

      prod.expect(prod_a <= st.q_cur && st.q_cur <= pow2 * prod_a,
                  "product bounds violated at n=" + std::to_string(n));

      Rational conv(st.p_cur, st.q_cur);
      Rational mediant(st.p_cur + st.p_prev, st.q_cur + st.q_prev);
      conv.canonicalize();
      mediant.canonicalize();
      Rational left = (n % 2 == 0) ? conv : mediant;
      Rational right = (n % 2 == 0) ? mediant : conv;
      Rational d_exact(1, st.q_cur * (st.q_cur + st.q_prev));
      d_exact.canonicalize();
      Rational lo(1, 2 * st.q_cur * st.q_cur);
      Rational hi(1, st.q_cur * st.q_cur);
      lo.canonicalize();
      hi.canonicalize();
      Rational width = right - left;
      diam.expect(width == d_exact && lo <= width && width <= hi,
                  "diameter mismatch at n=" + std::to_string(n));

      if (n > 1) {
        nest.expect(prev_left <= left && right <= prev_right,
                    "child cylinder escapes parent at n=" + std::to_string(n));
      }
      prev_left = left;
      prev_right = right;
    }
  }

  // sum_{a<=A} |I_1(a)| = 1 - 1/(A+1), exactly; telescoping keeps the
  // partial sums small.
  for (long A : {10L, 100L, 1000L}) {
    Rational sum(0);
    for (long a = 1; a <= A; ++a) {
      Rational d(1, BigInt(a) * (a + 1));
      d.canonicalize();
      sum += d;
    }
    Rational expected = Rational(1) - Rational(1, A + 1);
    expected.canonicalize();
    cover.expect(sum == expected, "level-1 covering identity at A=" + std::to_string(A));
  }

  // 1 <= sum q_n^-2 <= 2 at n = 1 and n = 2, by truncation plus tails.
  {
    CertifiedReal s1 = zeta_partial_sum(Rational(2), 2000) +
                       zeta_tail_bracket(Rational(2), 2000);
    qsum.expect(s1.lower() > 1 && s1.upper() < 2, "level-1 q^-2 sum bracket");

    const long A = 200;
    mpfr_prec_t prec = 128;
    CertifiedReal s2 = CertifiedReal::exact(0L, prec);
    for (long a = 1; a <= A; ++a) {
      for (long b = 1; b <= A; ++b) {
        BigInt q = BigInt(a) * b + 1;
        Rational term(1, q * q);
        term.canonicalize();
        s2 = s2 + CertifiedReal::from_rational(term, prec);
      }
    }
    // (ab+1)^-2 <= a^-2 b^-2 and sum b^-2 < 2, so each cut tail is < 2/A.
    CertifiedReal tail = CertifiedReal::from_rational(Rational(4, A), prec);
    CertifiedReal bracket = CertifiedReal::hull(s2, s2 + tail);
    qsum.expect(bracket.lower() > 1 && bracket.upper() < 2,
                "level-2 q^-2 sum bracket");
  }

  SuiteReport rep;
  rep.suite = "identities";
  rep.checks = {det.take(), qbound.take(), prod.take(),  diam.take(),
                nest.take(), cover.take(),  qsum.take()};
  return rep;
}

SuiteReport verify_roundtrip(long trials, unsigned long seed) {
  SeededRng rng(seed);
  Check words("expand_evaluate_identity_on_words");
  Check rats("evaluate_expand_identity_on_rationals");

  for (long t = 0; t < trials; ++t) {
    Word w = random_word(rng, 30, BigInt(10000));
    if (w[w.order() - 1] == 1) {
      // canonicalize: two expansions exist, keep the last quotient >= 2
      std::vector<BigInt> v = w.entries();
      v.back() += 1;
      w = Word(v);
    }
    Rational x = evaluate(w);
    Word back = gauss_expand(x, w.order() + 5);
    words.expect(back == w, "roundtrip failed for " + word_tag(w));
  }

  const BigInt qmax = 1000000000;
  for (long t = 0; t < trials; ++t) {
    BigInt q = rng.range(2, qmax);
    BigInt p = rng.range(1, q - 1);
    Rational x(p, q);
    x.canonicalize();
    Word w = gauss_expand(x, 200);
    rats.expect(evaluate(w) == x, "roundtrip failed for " + to_fraction(x));
  }

  SuiteReport rep;
  rep.suite = "roundtrip";
  rep.checks = {words.take(), rats.take()};
  return rep;
}

SuiteReport verify_tailunion(long trials, unsigned long seed) {
  SeededRng rng(seed);
  Check tel("tail_union_telescoping");

  for (long t = 0; t < trials; ++t) {
    Word w = random_word(rng, 8, BigInt(50));
    BigInt a_min = rng.range(1, 50);
    long A = a_min.get_si() + rng.range_long(0, 300);
    ConvergentState st = final_convergent(w);

    auto endpoint = [&](const BigInt& a) {
      Rational e(a * st.p_cur + st.p_prev, a * st.q_cur + st.q_prev);
      e.canonicalize();
      return e;
    };
    Rational partial(0);
    for (BigInt a = a_min; a < A; ++a) {
      Rational gap = endpoint(a) - endpoint(a + 1);
      if (gap < 0) gap = -gap;
      partial += gap;
    }
    Rational remainder(1, st.q_cur * (BigInt(A) * st.q_cur + st.q_prev));
    remainder.canonicalize();
    tel.expect(partial + remainder == tail_union_diameter(w, a_min),
               "telescoping mismatch for " + word_tag(w) + " a_min=" + a_min.get_str());
  }

  SuiteReport rep;
  rep.suite = "tailunion";
  rep.checks = {tel.take()};
  return rep;
}

SuiteReport verify_construction(unsigned long seed) {
  Check frozen("point_in_E_first_quotients");
  Check atleast2("point_in_E_quotients_at_least_2");
  Check member("point_in_E_membership_window");
  Check ratio_bound("point_in_E_ratio_bound");
  Check sampler("f_sampler_constraints_and_determinism");
  Check extend("dn_extension_keeps_membership");

  auto nsq = GrowthFunction::polynomial(Rational(2));
  Word w = point_in_E(nsq, 60);

  frozen.expect(w.prefix(3) == Word::of({7, 54, 403}),
                "expected quotients floor(e^2), floor(e^4), floor(e^6)");
  for (long k = 0; k < w.order(); ++k)
    atleast2.expect(w[k] >= 2, "quotient below 2 at k=" + std::to_string(k + 1));

  for (long n = 3; n <= 60; ++n) {
    auto m = dn_membership(w, nsq, Rational(1, 2), n);
    member.expect(m.holds, "membership fails at n=" + std::to_string(n));
  }
  for (long n = 10; n <= 60; n += 10) {
    auto r = khintchine_ratio(w, nsq, n);
    Rational dev_hi = (r.ratio - CertifiedReal::exact(1L)).abs().upper();
    ratio_bound.expect(dev_hi <= Rational(2, n),
                       "|ratio - 1| > 2/n at n=" + std::to_string(n));
  }

  {
    SSeq s = SSeq::from_psi(nsq);
    for (long ell : {2L, 3L}) {
      Word fw = f_set_sampler(s, ell, 12, seed);
      bool ok = true;
      for (long k = 1; k <= 12; ++k) {
        BigInt sk = s.value(k);
        if (!(sk <= fw[k - 1] && fw[k - 1] < ell * sk)) ok = false;
      }
      sampler.expect(ok, "sampled quotient outside [s_k, ell s_k)");
    }
    sampler.expect(f_set_sampler(s, 2, 12, seed) == f_set_sampler(s, 2, 12, seed),
                   "same seed produced different samples");
    sampler.expect(!(f_set_sampler(s, 2, 12, seed) ==
                     f_set_sampler(s, 2, 12, seed + 1)),
                   "different seeds produced identical samples");
  }

  for (long n : {5L, 10L, 20L}) {
    Word prefix = w.prefix(n);
    BigInt a = dn_extension(prefix, nsq, Rational(1, 2));
    Word extended = prefix;
    extended.append(a);
    extend.expect(dn_membership(extended, nsq, Rational(1, 2), n + 1).holds,
                  "extension leaves the window at n=" + std::to_string(n));
  }

  SuiteReport rep;
  rep.suite = "construction";
  rep.checks = {frozen.take(), atleast2.take(), member.take(),
                ratio_bound.take(), sampler.take(), extend.take()};
  return rep;
}

SuiteReport verify_measures(long trials, unsigned long seed) {
  SeededRng rng(seed);
  Check pval("pressure_zeta2_closed_form");
  Check ppos("pressure_positive");
  Check root("root_normalization");
  Check law("mu_product_law");
  Check mono("mu_monotone_in_a");
  Check cons("consistency_brackets_overlap");
  Check thr("n_epsilon_thresholds");
  Check ineq("measure_q_inequality");

  {
    // P(2) = log(pi^2/6).
    CertifiedReal p2 = pressure(Rational(2), 1e-9);
    CertifiedReal pi = CertifiedReal::pi(192);
    CertifiedReal rhs = (pi * pi / CertifiedReal::exact(6L, 192)).log();
    pval.expect((p2 - rhs).abs().upper() < Rational(1, 1000000),
                "pressure(2) differs from log(pi^2/6)");
  }

  for (const Rational& t :
       {Rational(11, 10), Rational(3, 2), Rational(2), Rational(3)}) {
    ppos.expect(pressure(t, 1e-8).lower() > 0, "P(t) not positive at t=" + to_fraction(t));
    auto rep = consistency_check(t, Word(), 10000);
    root.expect(rep.overlap && rep.children.contains(Rational(1)) &&
                    rep.children_width <= 1e-4,
                "root bracket at t=" + to_fraction(t));
  }

  const Rational ts[] = {Rational(11, 10), Rational(3, 2), Rational(2), Rational(3)};
  for (long t = 0; t < trials; ++t) {
    const Rational& tt = ts[t % 4];
    Word w = random_word(rng, 12, BigInt(50));
    long A = 1000 + rng.range_long(0, 9000);
    auto rep = consistency_check(tt, w, A);
    cons.expect(rep.overlap, "consistency bracket disjoint for " + word_tag(w));

    BigInt a = rng.range(1, 50);
    MuValue parent = mu(tt, w);
    Word wa = w;
    wa.append(a);
    MuValue child = mu(tt, wa);
    CertifiedReal expected = parent.log_mu - pressure(tt, 1e-12) -
                             CertifiedReal::from_rational(tt, 192) *
                                 CertifiedReal::log_of(a, 192);
    law.expect(CertifiedReal::overlap(child.log_mu, expected) &&
                   (child.log_mu - expected).abs().upper() < Rational(1, 1000000),
               "product law violated for " + word_tag(wa));
  }

  {
    Word w = Word::of({3, 1, 4});
    for (const Rational& tt : ts) {
      Word prev = w;
      prev.append(BigInt(1));
      MuValue prev_mu = mu(tt, prev);
      bool ok = true;
      for (long a = 2; a <= 6; ++a) {
        Word cur = w;
        cur.append(BigInt(a));
        MuValue cur_mu = mu(tt, cur);
        if (!(cur_mu.log_mu.upper() < prev_mu.log_mu.lower())) ok = false;
        prev_mu = std::move(cur_mu);
      }
      mono.expect(ok, "mu not strictly decreasing in a at t=" + to_fraction(tt));
    }
  }

  auto nsq = GrowthFunction::polynomial(Rational(2));
  auto pow2 = GrowthFunction::geometric(Rational(2));
  {
    auto r1 = n_epsilon_threshold(nsq, Rational(1, 2), 256);
    thr.expect(r1.n_epsilon.has_value() && *r1.n_epsilon == 13,
               "threshold for n^2 at eps=1/2 should be 13");
    auto r2 = n_epsilon_threshold(pow2, Rational(1, 2), 256);
    thr.expect(r2.n_epsilon.has_value() && *r2.n_epsilon == 7,
               "threshold for 2^n at eps=1/2 should be 7");
  }

  {
    Word w = point_in_E(nsq, 30);
    for (long n = 13; n <= 30; ++n) {
      auto rep = inequality4_check(Rational(1, 2), w, nsq, n);
      ineq.expect(rep.status == Ineq4Status::holds,
                  "inequality fails on the n^2 construction at n=" + std::to_string(n));
    }
    SSeq s2 = SSeq::from_psi(pow2);
    for (unsigned long sd = seed; sd < seed + 5; ++sd) {
      Word fw = f_set_sampler(s2, 2, 15, sd);
      auto rep = inequality4_check(Rational(1, 2), fw, pow2, 15);
      ineq.expect(rep.status == Ineq4Status::holds,
                  "inequality fails on an F-sample at n=15");
    }
    Word ones = Word::of({1, 1, 1, 1, 1});
    auto rep = inequality4_check(Rational(1, 2), ones, nsq, 5);
    ineq.expect(rep.status == Ineq4Status::inapplicable,
                "all-ones word should be inapplicable");
  }

  SuiteReport rep;
  rep.suite = "measures";
  rep.checks = {pval.take(), ppos.take(), root.take(), law.take(),
                mono.take(), cons.take(), thr.take(), ineq.take()};
  return rep;
}

std::vector<Rational> cantor_points(int depth) {
  if (depth < 1 || depth > 24) throw domain_error("cantor depth out of range");
  std::vector<Rational> pts;
  pts.reserve(1L << depth);
  BigInt den = 1;
  for (int i = 0; i < depth; ++i) den *= 3;
  for (long mask = 0; mask < (1L << depth); ++mask) {
    BigInt num = 0;
    BigInt place = den / 3;
    for (int i = 0; i < depth; ++i) {
      if (mask & (1L << i)) num += 2 * place;
      place /= 3;
    }
    Rational x(num, den);
    x.canonicalize();
    pts.push_back(x);
  }
  return pts;
}

FTrendResult f_family_box_trend(unsigned long seed) {
  SSeq s = SSeq::doubly_exponential();
  SeededRng rng(seed);
  std::vector<Word> words;
  words.reserve(1000);
  for (int i = 0; i < 1000; ++i) words.push_back(f_set_sampler(s, 2, 8, rng));

  // Window ends per depth: the sample supports counting up to the knee
  // near 2^-30 (10^3 points on a family with covering exponent ~ 1/3);
  // the window widens with the truncation depth up to that limit.
  const long window_end[] = {14, 18, 22, 28, 32};

  FTrendResult res;
  res.strictly_decreasing = true;
  res.stays_above_third = true;
  double prev = 2.0;
  for (long d = 4; d <= 8; ++d) {
    std::vector<Rational> pts;
    pts.reserve(words.size());
    for (const auto& w : words) pts.push_back(evaluate(w.prefix(d)));
    std::vector<long> scales;
    for (long j = 2; j <= window_end[d - 4]; ++j) scales.push_back(j);
    double v = box_counting(pts, scales).estimate.value.to_double();
    res.estimates.push_back(v);
    if (!(v < prev)) res.strictly_decreasing = false;
    if (!(v > 1.0 / 3.0)) res.stays_above_third = false;
    prev = v;
  }
  return res;
}

SuiteReport verify_dimension(unsigned long seed) {
  Check closed("closed_form_dimensions");
  Check twoway("lemma31_matches_theorem11");
  Check jb("jarnik_bound_halving");
  Check be("beta_exponent_limit");
  Check cov("covering_sum_dichotomy");
  Check box("box_counting_sanity");

  auto nsq = GrowthFunction::polynomial(Rational(2));
  auto pow2 = GrowthFunction::geometric(Rational(2));
  auto pow3 = GrowthFunction::geometric(Rational(3));
  auto fblock = GrowthFunction::factorial_block();

  {
    auto d1 = fast_khintchine_dimension(nsq, 100);
    closed.expect(d1.value.is_exact() && d1.value.rational() == Rational(1, 2),
                  "dim E(n^2) != 1/2");
    auto d2 = fast_khintchine_dimension(pow3, 100);
    closed.expect(d2.value.is_exact() && d2.value.rational() == Rational(1, 4),
                  "dim E(3^n) != 1/4");
    auto d3 = fast_khintchine_dimension(fblock, 5040);
    closed.expect(d3.value.is_exact() && d3.value.rational() == 0 && d3.b_infinite,
                  "dim E(factorial block) != 0");
    auto d4 = fast_khintchine_dimension(pow2, 100);
    closed.expect(d4.value.is_exact() && d4.value.rational() == Rational(1, 3),
                  "dim E(2^n) != 1/3");
  }

  {
    struct CasePair {
      const GrowthFunction* psi;
      Rational target;
    };
    const CasePair cases[] = {{&nsq, Rational(1, 2)},
                              {&pow2, Rational(1, 3)},
                              {&pow3, Rational(1, 4)}};
    for (const auto& c : cases) {
      auto est = lemma31_dimension(SSeq::from_psi(*c.psi), 200);
      double gap = std::fabs(est.value.to_double() - c.target.get_d());
      twoway.expect(gap <= 1e-2, "lemma31 route off target for " + c.psi->description());
    }
    auto est = lemma31_dimension(SSeq::doubly_exponential(), 30);
    twoway.expect(std::fabs(est.value.to_double() - 1.0 / 3.0) <= 1e-3,
                  "doubly exponential family should give 1/3");
    bool threw = false;
    try {
      lemma31_dimension(SSeq::constant(BigInt(5)), 50);
    } catch (const domain_error&) {
      threw = true;
    }
    twoway.expect(threw, "constant family must violate the growth hypothesis");
  }

  for (const Rational& beta :
       {Rational(1, 2), Rational(1), Rational(2), Rational(10)}) {
    auto [upper, star] = jarnik_bounds(beta);
    jb.expect(upper == Rational(2) / (Rational(2) + beta) &&
                  star == Rational(1) / (Rational(2) + beta) &&
                  star * 2 == upper,
              "jarnik bounds at beta=" + to_fraction(beta));
  }

  {
    for (const Rational& b : {Rational(2), Rational(3), Rational(5)}) {
      Rational target = Rational(1) / (Rational(1) + b);
      Rational prev_gap(-1);
      bool shrinking = true;
      for (const Rational& eps :
           {Rational(1, 100), Rational(1, 10000), Rational(1, 1000000)}) {
        auto r = beta_exponent(b, eps);
        Rational gap = r.induced_bound - target;
        if (gap < 0) gap = -gap;
        if (prev_gap >= 0 && !(gap < prev_gap)) shrinking = false;
        prev_gap = gap;
      }
      be.expect(shrinking && prev_gap < Rational(1, 100000),
                "induced bound does not converge to 1/(1+b) for b=" + to_fraction(b));
    }
    auto r = beta_exponent(Rational(1), Rational(1, 10));
    be.expect(!r.positive && r.beta < 0, "b=1 must flag a non-positive exponent");
    auto r2 = beta_exponent(Rational(2), Rational(1, 100));
    be.expect(std::fabs(r2.beta.get_d() - 0.9310) < 2e-3,
              "beta exponent value at b=2, eps=0.01");
  }

  {
    SSeq s = SSeq::doubly_exponential();
    Rational above = Rational(1, 3) + Rational(1, 20);
    Rational below = Rational(1, 3) - Rational(1, 20);
    auto up = covering_sum_trace(s, 2, above, 20);
    cov.expect(up.upper_tail_decreasing,
               "upper bounds should eventually decrease above the critical exponent");
    auto down = covering_sum_trace(s, 2, below, 20);
    cov.expect(down.lower_tail_increasing,
               "lower bounds should increase below the critical exponent");
  }

  {
    SeededRng rng(seed);
    std::vector<Rational> uniform;
    for (int i = 0; i < 10000; ++i) uniform.push_back(rng.unit_rational(53));
    auto u = box_counting(uniform, {2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12});
    box.expect(u.estimate.value.to_double() >= 0.95,
               "uniform sample box dimension below 0.95");

    auto c = box_counting(cantor_points(12), {2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12});
    double target = std::log(2.0) / std::log(3.0);
    box.expect(std::fabs(c.estimate.value.to_double() - target) <= 0.05,
               "cantor box dimension estimate off by more than 0.05");

    auto trend = f_family_box_trend(seed);
    box.expect(trend.strictly_decreasing && trend.stays_above_third,
               "F-family estimates should decrease toward 1/3");
  }

  SuiteReport rep;
  rep.suite = "dimension";
  rep.checks = {closed.take(), twoway.take(), jb.take(),
                be.take(),     cov.take(),    box.take()};
  return rep;
}

std::vector<SuiteReport> verify_all(long depth, long trials, unsigned long seed) {
  return {verify_identities(depth, trials, seed),
          verify_roundtrip(trials, seed),
          verify_tailunion(std::min(trials, 200L), seed),
          verify_construction(seed),
          verify_measures(std::min(trials, 50L), seed),
          verify_dimension(seed)};
}

}  // namespace cfs
