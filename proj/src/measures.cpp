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

#include "cfspectrum/measures.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <utility>

#include "cfspectrum/constructors.hpp"

namespace cfs {

namespace {

mpfr_prec_t prec_for_error(double err) {
  double bits = -std::log2(std::max(err, 1e-300)) + 64.0;
  return static_cast<mpfr_prec_t>(bits);
}

// k^x for integer k >= 1 and a certified exponent.
CertifiedReal pow_int(long k, const CertifiedReal& x, mpfr_prec_t) {
  return CertifiedReal::int_pow(k, x);
}

}  // namespace

CertifiedReal zeta_enclosure(const Rational& t, double target_error,
                             long max_terms) {
  if (t <= 1) throw domain_error("zeta needs t > 1");
  if (target_error <= 0) throw domain_error("target_error must be positive");
  mpfr_prec_t prec = prec_for_error(target_error);
  CertifiedReal minus_t = -CertifiedReal::from_rational(t, prec);
  CertifiedReal t_minus_1 = CertifiedReal::from_rational(t - 1, prec);
  CertifiedReal one_minus_t = -t_minus_1;

  CertifiedReal sum = CertifiedReal::exact(0L, prec);
  long K = 0;
  long next = 64;
  Rational err_bound(target_error);
  err_bound.canonicalize();
  while (true) {
    for (long k = K + 1; k <= next; ++k) sum = sum + pow_int(k, minus_t, prec);
    K = next;
    // x^-t is decreasing and convex: the midpoint rule overestimates each
    // term and the trapezoid rule underestimates, giving
    //   f(K+1)/2 + int_{K+1}^inf  <=  tail  <=  int_{K+1/2}^inf.
    CertifiedReal k1 = CertifiedReal::exact(K + 1, prec);
    CertifiedReal k_half =
        CertifiedReal::from_rational(Rational(2 * K + 1, 2), prec);
    CertifiedReal tail_lo = pow_int(K + 1, minus_t, prec) *
                                CertifiedReal::from_rational(Rational(1, 2), prec) +
                            k1.pow(one_minus_t) / t_minus_1;
    CertifiedReal tail_hi = k_half.pow(one_minus_t) / t_minus_1;
    CertifiedReal enc = sum + CertifiedReal::hull(tail_lo, tail_hi);
    if (enc.radius() * 2 <= err_bound) return enc;
    if (K >= max_terms)
      throw resource_error("zeta enclosure did not converge within max_terms");
    next = K * 2;
  }
}

namespace {

std::mutex g_pressure_mutex;
std::map<std::pair<std::string, double>, CertifiedReal> g_pressure_cache;

}  // namespace

CertifiedReal pressure(const Rational& t, double target_error) {
  std::pair<std::string, double> key(to_fraction(t), target_error);
  {
    std::lock_guard<std::mutex> lock(g_pressure_mutex);
    auto it = g_pressure_cache.find(key);
    if (it != g_pressure_cache.end()) return it->second;
  }
  // log is a contraction on [1, inf), so an enclosure of zeta to
  // target_error gives P to within the same error.
  CertifiedReal p = zeta_enclosure(t, target_error).log();
  std::lock_guard<std::mutex> lock(g_pressure_mutex);
  return g_pressure_cache.emplace(key, p).first->second;
}

CertifiedReal zeta_partial_sum(const Rational& t, long A, mpfr_prec_t prec) {
  if (t <= 1) throw domain_error("zeta partial sum needs t > 1");
  if (A < 1) throw domain_error("partial sum needs A >= 1");
  CertifiedReal minus_t = -CertifiedReal::from_rational(t, prec);
  CertifiedReal sum = CertifiedReal::exact(0L, prec);
  const long explicit_cut = std::min(A, 1024L);
  for (long k = 1; k <= explicit_cut; ++k) sum = sum + pow_int(k, minus_t, prec);
  if (A > explicit_cut) {
    // The block (cut, A] is the difference of two tails, each bracketed by
    // the integral sandwich; the extra width is ~ (t/8) cut^-(t+1).
    sum = sum + (zeta_tail_bracket(t, explicit_cut, prec) -
                 zeta_tail_bracket(t, A, prec));
  }
  return sum;
}

CertifiedReal zeta_tail_bracket(const Rational& t, long A, mpfr_prec_t prec) {
  if (t <= 1) throw domain_error("zeta tail needs t > 1");
  if (A < 1) throw domain_error("tail needs A >= 1");
  CertifiedReal minus_t = -CertifiedReal::from_rational(t, prec);
  CertifiedReal t_minus_1 = CertifiedReal::from_rational(t - 1, prec);
  CertifiedReal one_minus_t = -t_minus_1;
  // Midpoint/trapezoid sandwich for the convex decreasing summand:
  //   f(A+1)/2 + int_{A+1}^inf  <=  tail  <=  int_{A+1/2}^inf.
  CertifiedReal lo = pow_int(A + 1, minus_t, prec) *
                         CertifiedReal::from_rational(Rational(1, 2), prec) +
                     CertifiedReal::exact(A + 1, prec).pow(one_minus_t) / t_minus_1;
  CertifiedReal hi = CertifiedReal::from_rational(Rational(2 * A + 1, 2), prec)
                         .pow(one_minus_t) /
                     t_minus_1;
  return CertifiedReal::hull(lo, hi);
}

MuValue mu(const Rational& t, const Word& w, double target_error) {
  if (t <= 1) throw domain_error("mu needs t > 1");
  long n = w.order();
  mpfr_prec_t prec = std::max<mpfr_prec_t>(kDefaultPrec, prec_for_error(target_error));
  // The pressure target is clamped and independent of n so that the cache
  // is shared across words; the enclosure stays honest either way.
  CertifiedReal p = pressure(t, std::max(target_error / 16, 1e-12));
  CertifiedReal log_sum = CertifiedReal::exact(0L, prec);
  for (long j = 0; j < n; ++j)
    log_sum = log_sum + CertifiedReal::log_of(w[j], prec);
  MuValue v;
  v.log_mu = -(p * CertifiedReal::exact(n, prec)) -
             CertifiedReal::from_rational(t, prec) * log_sum;
  v.mu = v.log_mu.exp();
  return v;
}

ConsistencyReport consistency_check(const Rational& t, const Word& w,
                                    long alphabet_cap) {
  if (t <= 1) throw domain_error("consistency_check needs t > 1");
  if (alphabet_cap < 1) throw domain_error("alphabet_cap must be >= 1");
  mpfr_prec_t prec = 192;

  MuValue parent = mu(t, w, 1e-12);
  CertifiedReal p = pressure(t, 1e-12);
  // mu(w.a) = mu(w) e^-P a^-t, so the child sum with its zeta tail is
  // mu(w) e^-P (S_A + tail).
  CertifiedReal series =
      zeta_partial_sum(t, alphabet_cap, prec) + zeta_tail_bracket(t, alphabet_cap, prec);
  CertifiedReal children = parent.mu * (-p).exp() * series;

  ConsistencyReport rep;
  rep.t = t;
  rep.alphabet_cap = alphabet_cap;
  rep.children = children;
  rep.parent = parent.mu;
  rep.overlap = CertifiedReal::overlap(children, parent.mu);
  if (!rep.overlap) {
    Rational lo_gap = children.lower() - parent.mu.upper();
    Rational hi_gap = parent.mu.lower() - children.upper();
    rep.gap = std::max(lo_gap.get_d(), hi_gap.get_d());
  }
  rep.children_width = Rational(children.radius() * 2).get_d();
  rep.parent_width = Rational(parent.mu.radius() * 2).get_d();
  return rep;
}

ThresholdResult n_epsilon_threshold(const GrowthFunction& psi,
                                    const Rational& epsilon, long horizon) {
  if (epsilon <= 0 || epsilon >= 1)
    throw domain_error("n_epsilon_threshold needs epsilon in (0,1)");
  if (horizon < 1) throw domain_error("horizon must be >= 1");

  ThresholdResult res;
  res.horizon = horizon;
  res.t = Rational(1) + epsilon / 2;
  res.t.canonicalize();

  Rational factor = (epsilon / 2) * (Rational(1) - epsilon);
  factor.canonicalize();

  double err = 1e-10;
  CertifiedReal p = pressure(res.t, err);
  res.pressure_value = p;

  // cond(n): n P(t) <= factor psi(n), decided by certified comparison.
  auto cond = [&](long n) -> bool {
    mpfr_prec_t prec = kDefaultPrec;
    for (int attempt = 0; attempt < 4; ++attempt) {
      CertifiedReal lhs = p * CertifiedReal::exact(n, prec);
      CertifiedReal rhs = psi(n, prec).enclosure(prec) *
                          CertifiedReal::from_rational(factor, prec);
      auto le = CertifiedReal::certainly_le(lhs, rhs);
      if (le.has_value()) return *le;
      err /= 1000;
      prec *= 2;
      p = pressure(res.t, err);
    }
    throw precision_error("threshold comparison undecidable");
  };

  long last_false = 0;
  for (long n = horizon; n >= 1; --n) {
    if (!cond(n)) {
      last_false = n;
      break;
    }
  }
  if (last_false == horizon)
    res.n_epsilon = std::nullopt;
  else
    res.n_epsilon = last_false + 1;
  return res;
}

Ineq4Report inequality4_check(const Rational& epsilon, const Word& w,
                              const GrowthFunction& psi, long n,
                              std::optional<Rational> t_override) {
  if (epsilon <= 0 || epsilon >= 1)
    throw domain_error("inequality4_check needs epsilon in (0,1)");
  if (n < 0) n = w.order();
  if (n < 1 || n > w.order())
    throw domain_error("inequality4_check needs 1 <= n <= order");

  Ineq4Report rep;
  rep.t = t_override.value_or(Rational(1) + epsilon / 2);
  rep.t.canonicalize();
  if (rep.t <= 1) throw domain_error("inequality4_check needs t > 1");

  auto member = dn_membership(w, psi, epsilon, n);
  if (!member.holds) {
    rep.status = Ineq4Status::inapplicable;
    rep.reason = "word is outside the membership window at level n";
    return rep;
  }

  // The per-level hypothesis: n P(1+eps/2) <= (eps/2)(1-eps) psi(n).
  Rational factor = (epsilon / 2) * (Rational(1) - epsilon);
  CertifiedReal p = pressure(rep.t, 1e-12);
  CertifiedReal lhs_cond = p * CertifiedReal::exact(n);
  CertifiedReal rhs_cond = psi(n).enclosure() * CertifiedReal::from_rational(factor);
  auto cond = CertifiedReal::certainly_le(lhs_cond, rhs_cond);
  if (cond != std::optional<bool>(true)) {
    rep.status = Ineq4Status::inapplicable;
    rep.reason = "n P(1+eps/2) <= (eps/2)(1-eps) psi(n) fails at this level";
    return rep;
  }

  mpfr_prec_t prec = 192;
  ConvergentState st = final_convergent(w.prefix(n));
  CertifiedReal log_q = CertifiedReal::log_of(st.q_cur, prec);
  rep.lhs_log = -(CertifiedReal::from_rational(Rational(1) + epsilon, prec) * log_q);
  rep.rhs_log = mu(rep.t, w.prefix(n), 1e-12).log_mu;

  auto le = CertifiedReal::certainly_le(rep.lhs_log, rep.rhs_log);
  if (!le.has_value())
    rep.status = Ineq4Status::undecided;
  else
    rep.status = *le ? Ineq4Status::holds : Ineq4Status::fails;
  return rep;
}

}  // namespace cfs
