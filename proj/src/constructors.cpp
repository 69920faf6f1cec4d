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

#include <algorithm>
#include <cmath>
#include <memory>
#include <sstream>

namespace cfs {

namespace {

// Exponents below this are materialized exactly when only the log is needed.
constexpr double kMaterializeExponent = 4096.0;

// floor(e^m) needs about m*log2(e) bits before the enclosure of e^m can
// separate integer boundaries.
mpfr_prec_t exp_floor_prec(double m_upper) {
  double bits = 1.4427 * std::max(m_upper, 1.0) + 64.0;
  return static_cast<mpfr_prec_t>(bits);
}

double scalar_upper(const Scalar& s) {
  return s.is_exact() ? s.rational().get_d() : s.enclosure().upper().get_d();
}

// Bits in the integer part; keeps absolute rounding error bounded when
// enclosing values of enormous magnitude.
mpfr_prec_t scalar_magnitude_bits(const Scalar& s) {
  Rational v = s.is_exact() ? s.rational() : s.enclosure().upper();
  if (v < 0) v = -v;
  long num = mpz_sizeinbase(v.get_num().get_mpz_t(), 2);
  long den = mpz_sizeinbase(v.get_den().get_mpz_t(), 2);
  return static_cast<mpfr_prec_t>(std::max(num - den + 1, 0L));
}

// psi(k) - psi(k-1) certified positive, else domain_error.
void require_increasing_step(const GrowthFunction& psi, long k) {
  Scalar inc = psi.increment(k);
  if (inc.is_exact()) {
    if (inc.rational() <= 0)
      throw domain_error("psi must be strictly increasing on the range");
    return;
  }
  auto pos = inc.enclosure().greater_than(Rational(0));
  if (pos != std::optional<bool>(true)) {
    inc = psi.increment(k, 512);
    pos = inc.enclosure().greater_than(Rational(0));
    if (pos != std::optional<bool>(true))
      throw domain_error("psi increase not certifiable at step " +
                         std::to_string(k));
  }
}

void require_exponent_cap(const Scalar& m, long k, long cap) {
  bool over;
  if (m.is_exact()) {
    over = m.rational() > cap;
  } else {
    over = m.enclosure().greater_than(Rational(cap)) == std::optional<bool>(true);
  }
  if (over) {
    std::ostringstream os;
    os << "construction exponent at k=" << k << " exceeds cap " << cap;
    throw resource_error(os.str());
  }
}

}  // namespace

BigInt floor_exp_certified(const std::function<Scalar(mpfr_prec_t)>& exponent) {
  double m_up = scalar_upper(exponent(64));
  if (m_up > 5e7)
    throw resource_error("floor(e^m): exponent too large to materialize");
  mpfr_prec_t prec = exp_floor_prec(m_up);
  for (int attempt = 0; attempt < 8; ++attempt) {
    CertifiedReal m = exponent(prec).enclosure(prec);
    auto f = m.exp().floor_certified();
    if (f.has_value()) return *f;
    prec *= 2;
  }
  throw precision_error("floor(e^m) not certifiable at escalated precision");
}

CertifiedReal log_floor_exp(const std::function<Scalar(mpfr_prec_t)>& exponent,
                            mpfr_prec_t prec) {
  double m_up = scalar_upper(exponent(64));
  if (m_up <= kMaterializeExponent) {
    BigInt v = floor_exp_certified(exponent);
    if (v < 1) throw domain_error("floor(e^m) < 1: exponent is negative");
    return CertifiedReal::log_of(v, prec);
  }
  // floor(e^m) lies in (e^m - 1, e^m], so its log lies in
  // (m + log(1 - e^-m), m].
  Scalar probe2 = exponent(64);
  mpfr_prec_t need = prec + scalar_magnitude_bits(probe2);
  CertifiedReal m = exponent(need).enclosure(need);
  CertifiedReal slack = (-m).exp();  // e^-m, essentially zero here
  CertifiedReal low = m + (-slack).log1p();
  return CertifiedReal::hull(low, m);
}

SSeq SSeq::from_psi(const GrowthFunction& psi, long exponent_cap) {
  auto psi_copy = std::make_shared<GrowthFunction>(psi);
  SSeq s;
  s.description = "floor(e^(psi(k)-psi(k-1))) for psi = " + psi.description();
  s.value = [psi_copy, exponent_cap](long k) {
    auto m_at = [&](mpfr_prec_t prec) { return psi_copy->increment(k, prec); };
    require_exponent_cap(m_at(64), k, exponent_cap);
    BigInt v = floor_exp_certified(m_at);
    if (v < 1) throw domain_error("s_k = floor(e^m) < 1: psi not increasing");
    return v;
  };
  s.log_value = [psi_copy](long k) {
    return log_floor_exp(
        [&](mpfr_prec_t prec) { return psi_copy->increment(k, prec); });
  };
  return s;
}

SSeq SSeq::doubly_exponential() {
  SSeq s;
  s.description = "2^(2^k)";
  s.value = [](long k) {
    if (k < 1) throw domain_error("s_k needs k >= 1");
    if (k > 24) throw resource_error("2^(2^k) too large to materialize");
    BigInt v;
    mpz_ui_pow_ui(v.get_mpz_t(), 2, 1UL << k);
    return v;
  };
  s.log_value = [](long k) {
    if (k < 1) throw domain_error("s_k needs k >= 1");
    if (k > 60) throw resource_error("2^k exponent overflows");
    CertifiedReal log2 = CertifiedReal::exact(2, 192).log();
    return log2 * CertifiedReal::exact(BigInt(1) << k);
  };
  return s;
}

SSeq SSeq::constant(BigInt c) {
  if (c < 1) throw domain_error("constant s sequence needs c >= 1");
  SSeq s;
  s.description = "constant " + c.get_str();
  s.value = [c](long) { return c; };
  s.log_value = [c](long) { return CertifiedReal::log_of(c, 192); };
  return s;
}

SSeq SSeq::from_values(std::vector<BigInt> values) {
  for (const auto& v : values)
    if (v < 1) throw domain_error("s sequence entries must be >= 1");
  auto data = std::make_shared<std::vector<BigInt>>(std::move(values));
  SSeq s;
  s.description = "table";
  s.value = [data](long k) {
    if (k < 1 || static_cast<size_t>(k) > data->size())
      throw domain_error("s sequence index out of range");
    return (*data)[k - 1];
  };
  s.log_value = [data](long k) {
    if (k < 1 || static_cast<size_t>(k) > data->size())
      throw domain_error("s sequence index out of range");
    return CertifiedReal::log_of((*data)[k - 1], 192);
  };
  return s;
}

Word point_in_E(const GrowthFunction& psi, long n, long exponent_cap) {
  if (n < 1) throw domain_error("point_in_E needs n >= 1");
  Word w;
  for (long k = 1; k <= n; ++k) {
    require_increasing_step(psi, k);
    auto m_at = [&](mpfr_prec_t prec) {
      return psi.increment(k, prec) + Scalar::exact(Rational(1));
    };
    require_exponent_cap(m_at(64), k, exponent_cap);
    w.append(floor_exp_certified(m_at));
  }
  return w;
}

std::vector<CertifiedReal> point_in_E_log_trace(const GrowthFunction& psi, long n) {
  if (n < 1) throw domain_error("point_in_E needs n >= 1");
  std::vector<CertifiedReal> logs;
  logs.reserve(n);
  for (long k = 1; k <= n; ++k) {
    require_increasing_step(psi, k);
    logs.push_back(log_floor_exp([&](mpfr_prec_t prec) {
      return psi.increment(k, prec) + Scalar::exact(Rational(1));
    }));
  }
  return logs;
}

namespace {

LevelSetRatio ratio_from_logs(const std::vector<CertifiedReal>& logs,
                              const GrowthFunction& psi, long n,
                              mpfr_prec_t prec) {
  CertifiedReal sum = CertifiedReal::exact(0L, prec);
  for (long j = 0; j < n; ++j) sum = sum + logs[j];
  LevelSetRatio r;
  r.n = n;
  r.log_sum = sum;
  r.ratio = sum / psi(n, prec).enclosure(prec);
  return r;
}

}  // namespace

LevelSetRatio khintchine_ratio(const Word& w, const GrowthFunction& psi, long n) {
  if (n < 1 || n > w.order())
    throw domain_error("khintchine_ratio needs 1 <= n <= order");
  Rational bound(1);
  bound /= BigInt(1) << 67;  // < 1e-20
  mpfr_prec_t prec = 192;
  for (int attempt = 0; attempt < 6; ++attempt) {
    std::vector<CertifiedReal> logs;
    logs.reserve(n);
    for (long j = 0; j < n; ++j)
      logs.push_back(CertifiedReal::log_of(w[j], prec));
    LevelSetRatio r = ratio_from_logs(logs, psi, n, prec);
    if (r.ratio.radius() <= bound) return r;
    prec *= 2;
  }
  throw precision_error("khintchine_ratio: target radius unreachable");
}

LevelSetRatio khintchine_ratio(const std::vector<CertifiedReal>& log_quotients,
                               const GrowthFunction& psi, long n) {
  if (n < 1 || n > static_cast<long>(log_quotients.size()))
    throw domain_error("khintchine_ratio needs 1 <= n <= trace length");
  return ratio_from_logs(log_quotients, psi, n, 192);
}

namespace {

DnMembership membership_from_ratio(const LevelSetRatio& r, const Rational& epsilon) {
  if (epsilon <= 0 || epsilon >= 1)
    throw domain_error("dn_membership needs epsilon in (0,1)");
  DnMembership m;
  m.epsilon = epsilon;
  m.n = r.n;
  m.ratio = r;
  auto above = r.ratio.greater_than(Rational(1) - epsilon);
  auto below = r.ratio.less_than(Rational(1) + epsilon);
  if (!above.has_value() || !below.has_value())
    throw precision_error("dn_membership: ratio straddles the window edge");
  m.holds = *above && *below;
  return m;
}

}  // namespace

DnMembership dn_membership(const Word& w, const GrowthFunction& psi,
                           const Rational& epsilon, long n) {
  return membership_from_ratio(khintchine_ratio(w, psi, n), epsilon);
}

DnMembership dn_membership(const std::vector<CertifiedReal>& log_quotients,
                           const GrowthFunction& psi, const Rational& epsilon,
                           long n) {
  return membership_from_ratio(khintchine_ratio(log_quotients, psi, n), epsilon);
}

Word f_set_sampler(const SSeq& s, long ell, long n, unsigned long seed) {
  SeededRng rng(seed);
  return f_set_sampler(s, ell, n, rng);
}

Word f_set_sampler(const SSeq& s, long ell, long n, SeededRng& rng) {
  if (ell < 2) throw domain_error("f_set_sampler needs ell >= 2");
  if (n < 1) throw domain_error("f_set_sampler needs n >= 1");
  Word w;
  for (long k = 1; k <= n; ++k) {
    BigInt sk = s.value(k);
    if (sk < 1) throw domain_error("s_k must be >= 1");
    BigInt span = BigInt(ell - 1) * sk;  // choices in [s_k, ell*s_k)
    w.append(sk + rng.below(span));
  }
  return w;
}

std::vector<long> jarnik_check(const Word& w, const Rational& beta) {
  if (beta <= 0) throw domain_error("jarnik_check needs beta > 0");
  if (w.order() < 2) throw domain_error("jarnik_check needs order >= 2");
  std::vector<long> hits;
  ConvergentState st;
  for (long n = 1; n < w.order(); ++n) {
    st.advance(w[n - 1]);
    const BigInt& a_next = w[n];
    bool qualify;
    if (st.q_cur == 1) {
      qualify = true;  // q_n^beta = 1 <= a for every quotient
    } else {
      bool decided = false;
      qualify = false;
      mpfr_prec_t prec = 128;
      for (int attempt = 0; attempt < 5 && !decided; ++attempt, prec *= 4) {
        CertifiedReal bound = (CertifiedReal::log_of(st.q_cur, prec) *
                               CertifiedReal::from_rational(beta, prec))
                                  .exp();
        auto above = bound.greater_than(Rational(a_next));
        if (above.has_value()) {
          qualify = !*above;  // a_{n+1} >= q_n^beta iff not (q_n^beta > a)
          decided = true;
        }
      }
      if (!decided) {
        // Only an exact tie a^den == q^num resists refinement.
        if (!mpz_fits_ulong_p(beta.get_den().get_mpz_t()) ||
            !mpz_fits_ulong_p(beta.get_num().get_mpz_t()))
          throw precision_error("jarnik_check: comparison undecidable");
        BigInt lhs, rhs;
        mpz_pow_ui(lhs.get_mpz_t(), a_next.get_mpz_t(), beta.get_den().get_ui());
        mpz_pow_ui(rhs.get_mpz_t(), st.q_cur.get_mpz_t(), beta.get_num().get_ui());
        qualify = lhs >= rhs;
      }
    }
    if (qualify) hits.push_back(n);
  }
  return hits;
}

BigInt dn_extension(const Word& w, const GrowthFunction& psi,
                    const Rational& epsilon, long exponent_cap) {
  if (w.empty()) throw domain_error("dn_extension needs a nonempty word");
  if (epsilon <= 0 || epsilon >= 1)
    throw domain_error("dn_extension needs epsilon in (0,1)");
  long n = w.order();

  mpfr_prec_t prec = 192;
  CertifiedReal log_sum = CertifiedReal::exact(0L, prec);
  for (long j = 0; j < n; ++j)
    log_sum = log_sum + CertifiedReal::log_of(w[j], prec);
  CertifiedReal threshold =
      psi(n + 1, prec).enclosure(prec) *
      CertifiedReal::from_rational(Rational(1) - epsilon, prec);

  auto within = CertifiedReal::certainly_le(log_sum, threshold);
  if (!within.has_value())
    throw precision_error("dn_extension: threshold comparison undecided");
  if (!*within) return BigInt(1);

  auto m_at = [&](mpfr_prec_t p) {
    CertifiedReal ls = CertifiedReal::exact(0L, p);
    for (long j = 0; j < n; ++j) ls = ls + CertifiedReal::log_of(w[j], p);
    return Scalar::certified(psi(n + 1, p).enclosure(p) - ls);
  };
  require_exponent_cap(m_at(64), n + 1, exponent_cap);
  BigInt a = floor_exp_certified(m_at);
  if (a < 1) throw domain_error("dn_extension produced a floor below 1");
  return a;
}

}  // namespace cfs
