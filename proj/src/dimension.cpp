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

#include <algorithm>
#include <cmath>
#include <set>

namespace cfs {

namespace {

constexpr mpfr_prec_t kTracePrec = 192;

// log sum_{k<=n} e^{L_k}, stable against huge magnitudes.
CertifiedReal log_sum_exp(const std::vector<CertifiedReal>& logs, long n) {
  CertifiedReal m = logs[0];
  for (long k = 1; k < n; ++k)
    if (logs[k].midpoint() > m.midpoint()) m = logs[k];
  CertifiedReal acc = CertifiedReal::exact(0L, kTracePrec);
  for (long k = 0; k < n; ++k) acc = acc + (logs[k] - m).exp();
  return m + acc.log();
}

}  // namespace

DimensionEstimate lemma31_dimension(const SSeq& s, long horizon) {
  if (horizon < 10) throw domain_error("lemma31_dimension needs horizon >= 10");

  std::vector<CertifiedReal> logs;
  logs.reserve(horizon + 1);
  for (long k = 1; k <= horizon + 1; ++k) logs.push_back(s.log_value(k));

  // Hypothesis: the running average (1/n) sum s_k grows across the range.
  // Checked on log((1/n) sum s_k) at decile checkpoints.
  Rational margin(1, 1000000000);
  std::vector<CertifiedReal> avg;
  for (int d = 1; d <= 10; ++d) {
    long n = d * horizon / 10;
    avg.push_back(log_sum_exp(logs, n) -
                  CertifiedReal::log_of(BigInt(n), kTracePrec));
  }
  for (size_t i = 1; i < avg.size(); ++i) {
    if (!(avg[i].lower() > avg[i - 1].upper() + margin))
      throw domain_error(
          "lemma31_dimension: running average of s_k does not grow "
          "across the sampled range");
  }

  DimensionEstimate est;
  est.method = "lemma31";
  est.horizon = horizon;

  CertifiedReal sum = CertifiedReal::exact(0L, kTracePrec);
  std::vector<CertifiedReal> ratios;
  ratios.reserve(horizon);
  for (long n = 1; n <= horizon; ++n) {
    sum = sum + logs[n - 1];
    CertifiedReal denom = sum + sum + logs[n];
    ratios.push_back(sum / denom);
    est.trend.push_back(ratios.back().to_double());
  }

  long lo = horizon / 2;
  CertifiedReal best = ratios[lo - 1];
  for (long n = lo + 1; n <= horizon; ++n)
    if (ratios[n - 1].midpoint() < best.midpoint()) best = ratios[n - 1];
  est.value = Scalar::certified(best);
  return est;
}

DimensionEstimate fast_khintchine_dimension(const GrowthFunction& psi,
                                            long horizon,
                                            double equiv_tolerance) {
  if (horizon < 10)
    throw domain_error("fast_khintchine_dimension needs horizon >= 10");

  DimensionEstimate est;
  est.method = "theorem11";
  est.horizon = horizon;

  auto equiv = increasing_equivalence_check(psi, horizon, equiv_tolerance);
  if (!equiv.equivalent) {
    est.value = Scalar::exact(Rational(0));
    est.empty_set = true;
    return est;
  }
  est.diagnostics_ok = superlinearity_check(psi, horizon).passed;

  if (psi.known_b_infinite()) {
    est.value = Scalar::exact(Rational(0));
    est.b_infinite = true;
    return est;
  }
  if (psi.known_b().has_value()) {
    Rational v = Rational(1) / (Rational(1) + *psi.known_b());
    v.canonicalize();
    est.value = Scalar::exact(v);
    return est;
  }

  auto diag = limsup_ratio(psi, horizon, {horizon / 4, horizon / 2});
  for (const auto& m : diag.window_maxima) est.trend.push_back(m.to_double());
  if (diag.divergence_flag) {
    est.value = Scalar::exact(Rational(0));
    est.b_infinite = true;
    return est;
  }
  est.value = Scalar::exact(Rational(1)) /
              (Scalar::exact(Rational(1)) + diag.b_hat);
  return est;
}

std::pair<Rational, Rational> jarnik_bounds(const Rational& beta) {
  if (beta <= 0) throw domain_error("jarnik_bounds needs beta > 0");
  Rational upper = Rational(2) / (Rational(2) + beta);
  Rational star = Rational(1) / (Rational(2) + beta);
  upper.canonicalize();
  star.canonicalize();
  return {upper, star};
}

BetaExponent beta_exponent(const Rational& b, const Rational& epsilon) {
  if (b < 1) throw domain_error("beta_exponent needs b >= 1");
  if (epsilon <= 0 || epsilon >= 1)
    throw domain_error("beta_exponent needs epsilon in (0,1)");
  BetaExponent r;
  r.b = b;
  r.epsilon = epsilon;
  Rational one_minus = Rational(1) - epsilon;
  Rational one_plus = Rational(1) + epsilon;
  r.beta = one_minus * (b * one_minus * one_minus / one_plus - 1);
  r.beta.canonicalize();
  r.positive = b * one_minus * one_minus > one_plus;
  r.induced_bound = one_plus / (Rational(2) + r.beta);
  r.induced_bound.canonicalize();
  return r;
}

CoveringTrace covering_sum_trace(const SSeq& s, long ell,
                                 const Rational& s_exponent, long depth) {
  if (ell < 2) throw domain_error("covering_sum_trace needs ell >= 2");
  if (s_exponent <= 0 || s_exponent >= 1)
    throw domain_error("covering_sum_trace needs s in (0,1)");
  if (depth < 3) throw domain_error("covering_sum_trace needs depth >= 3");

  const mpfr_prec_t prec = kTracePrec;
  CertifiedReal log_ell = CertifiedReal::exact(ell, prec).log();
  CertifiedReal log_ell_minus_1 =
      ell == 2 ? CertifiedReal::exact(0L, prec)
               : CertifiedReal::exact(ell - 1, prec).log();
  CertifiedReal log2 = CertifiedReal::exact(2, prec).log();
  CertifiedReal sexp = CertifiedReal::from_rational(s_exponent, prec);

  std::vector<CertifiedReal> logs;
  logs.reserve(depth + 1);
  for (long k = 1; k <= depth + 1; ++k) logs.push_back(s.log_value(k));

  CoveringTrace trace;
  CertifiedReal sum = CertifiedReal::exact(0L, prec);  // sum of log s_k, k<=n
  for (long n = 1; n <= depth; ++n) {
    sum = sum + logs[n - 1];
    const CertifiedReal& L_next = logs[n];

    // count = prod (ell-1) s_k over k <= n.
    CertifiedReal log_count = log_ell_minus_1 * n + sum;

    // J_n spans the children a in [s_{n+1}, ell s_{n+1}) of one F-cylinder:
    //   |J_n| = (ell-1) s / ((s q_n + q_{n-1})(ell s q_n + q_{n-1})).
    // Upper: q_{n-1} >= 0 and log q_n >= max(sum log s_k, (n-1)/2 log 2),
    // the product bound or the universal denominator growth, whichever is
    // stronger (the latter carries single-choice families).
    Rational qn_lo = sum.lower();
    Rational universal = Rational(n - 1) * log2.lower() / 2;
    if (universal > qn_lo) qn_lo = universal;
    CertifiedReal qn_lo_iv = CertifiedReal::from_rational(qn_lo, prec);
    CertifiedReal diam_hi =
        log_ell_minus_1 - log_ell - L_next - (qn_lo_iv + qn_lo_iv);
    // Lower: q_{n-1} <= q_n and q_n <= 2^n prod a_k < 2^n prod (ell s_k),
    // with log(s+1) and log(ell s + 1) enclosed through log1p.
    CertifiedReal log_s_plus_1 = L_next + (-L_next).exp().log1p();
    CertifiedReal log_ls_plus_1 =
        L_next + log_ell + (-(L_next + log_ell)).exp().log1p();
    CertifiedReal qn_hi = (log2 + log_ell) * n + sum;
    CertifiedReal diam_lo =
        log_ell_minus_1 + L_next - log_s_plus_1 - log_ls_plus_1 - (qn_hi + qn_hi);

    CoveringLevel level;
    level.n = n;
    level.log_lower = (log_count + sexp * diam_lo).lower().get_d();
    level.log_upper = (log_count + sexp * diam_hi).upper().get_d();
    trace.levels.push_back(level);
  }

  long window = std::max<long>(3, depth / 4);
  trace.upper_tail_decreasing = true;
  trace.lower_tail_increasing = true;
  for (long i = depth - window; i < depth - 1; ++i) {
    if (!(trace.levels[i + 1].log_upper < trace.levels[i].log_upper))
      trace.upper_tail_decreasing = false;
    if (!(trace.levels[i + 1].log_lower > trace.levels[i].log_lower))
      trace.lower_tail_increasing = false;
  }
  return trace;
}

BoxCountingResult box_counting(const std::vector<Rational>& points,
                               const std::vector<long>& dyadic_scales) {
  if (points.size() < 1000)
    throw domain_error("box_counting needs at least 10^3 points");
  if (dyadic_scales.size() < 4)
    throw domain_error("box_counting needs at least 4 scales");
  std::vector<long> scales = dyadic_scales;
  std::sort(scales.begin(), scales.end());
  if (scales.front() < 1) throw domain_error("dyadic scales must be >= 1");
  if ((BigInt(1) << (scales.back() - scales.front())) < 1000)
    throw domain_error("box_counting scales must span 3 orders of magnitude");
  for (const auto& x : points)
    if (x < 0 || x >= 1) throw domain_error("box_counting points must be in [0,1)");

  BoxCountingResult res;
  std::vector<double> xs, ys;
  for (long j : scales) {
    std::set<BigInt> bins;
    for (const auto& x : points) {
      // floor(x 2^j): exact, half-open bins, boundary points to the right.
      BigInt bin = (x.get_num() << j) / x.get_den();
      bins.insert(bin);
    }
    long count = static_cast<long>(bins.size());
    res.scale_counts.emplace_back(j, count);
    xs.push_back(static_cast<double>(j) * std::log(2.0));
    ys.push_back(std::log(static_cast<double>(count)));
  }

  double n = static_cast<double>(xs.size());
  double mx = 0, my = 0;
  for (size_t i = 0; i < xs.size(); ++i) {
    mx += xs[i];
    my += ys[i];
  }
  mx /= n;
  my /= n;
  double sxy = 0, sxx = 0;
  for (size_t i = 0; i < xs.size(); ++i) {
    sxy += (xs[i] - mx) * (ys[i] - my);
    sxx += (xs[i] - mx) * (xs[i] - mx);
  }
  res.slope_raw = sxy / sxx;
  double intercept = my - res.slope_raw * mx;
  double ss = 0;
  for (size_t i = 0; i < xs.size(); ++i) {
    double r = ys[i] - (intercept + res.slope_raw * xs[i]);
    ss += r * r;
  }
  res.residual = std::sqrt(ss / n);

  double clamped = std::min(1.0, std::max(0.0, res.slope_raw));
  Rational v(clamped);
  v.canonicalize();
  res.estimate.value = Scalar::exact(v);
  res.estimate.method = "box_counting";
  res.estimate.horizon = scales.back();
  for (const auto& [j, c] : res.scale_counts)
    res.estimate.trend.push_back(static_cast<double>(c));
  return res;
}

std::vector<Rational> sample_f_points(const SSeq& s, long ell, long depth,
                                      long count, unsigned long seed) {
  if (count < 1) throw domain_error("sample_f_points needs count >= 1");
  SeededRng rng(seed);
  std::vector<Rational> pts;
  pts.reserve(count);
  for (long i = 0; i < count; ++i)
    pts.push_back(evaluate(f_set_sampler(s, ell, depth, rng)));
  return pts;
}

}  // namespace cfs
