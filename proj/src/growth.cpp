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

#include <algorithm>
#include <fstream>
#include <memory>
#include <sstream>

namespace cfs {

Scalar Scalar::exact(Rational v) {
  Scalar s;
  v.canonicalize();
  s.exact_ = std::move(v);
  return s;
}

Scalar Scalar::certified(CertifiedReal v) {
  Scalar s;
  s.exact_.reset();
  s.approx_ = std::move(v);
  return s;
}

const Rational& Scalar::rational() const {
  if (!exact_) throw domain_error("Scalar is not exact");
  return *exact_;
}

CertifiedReal Scalar::enclosure(mpfr_prec_t prec) const {
  if (exact_) return CertifiedReal::from_rational(*exact_, prec);
  return *approx_;
}

double Scalar::to_double() const {
  if (exact_) return exact_->get_d();
  return approx_->to_double();
}

Rational Scalar::mid() const {
  if (exact_) return *exact_;
  return approx_->midpoint();
}

Scalar Scalar::operator+(const Scalar& o) const {
  if (exact_ && o.exact_) return exact(*exact_ + *o.exact_);
  return certified(enclosure() + o.enclosure());
}

Scalar Scalar::operator-(const Scalar& o) const {
  if (exact_ && o.exact_) return exact(*exact_ - *o.exact_);
  return certified(enclosure() - o.enclosure());
}

Scalar Scalar::operator*(const Scalar& o) const {
  if (exact_ && o.exact_) return exact(*exact_ * *o.exact_);
  return certified(enclosure() * o.enclosure());
}

Scalar Scalar::operator/(const Scalar& o) const {
  if (exact_ && o.exact_) {
    if (*o.exact_ == 0) throw domain_error("Scalar division by zero");
    return exact(*exact_ / *o.exact_);
  }
  return certified(enclosure() / o.enclosure());
}

Scalar Scalar::abs_minus_one() const {
  if (exact_) {
    Rational d = *exact_ - 1;
    return exact(d < 0 ? Rational(-d) : d);
  }
  return certified((*approx_ - CertifiedReal::exact(1L)).abs());
}

int Scalar::compare(const Scalar& o) const {
  if (exact_ && o.exact_) return cmp(*exact_, *o.exact_);
  Rational a = mid(), b = o.mid();
  return cmp(a, b);
}

Scalar Scalar::max(const Scalar& a, const Scalar& b) {
  return a.compare(b) >= 0 ? a : b;
}

Scalar Scalar::min(const Scalar& a, const Scalar& b) {
  return a.compare(b) <= 0 ? a : b;
}

GrowthFunction::GrowthFunction(GrowthKind kind, std::string description, Eval eval,
                               std::optional<Rational> known_b, bool b_infinite)
    : kind_(kind),
      description_(std::move(description)),
      eval_(std::move(eval)),
      known_b_(std::move(known_b)),
      b_infinite_(b_infinite) {}

GrowthFunction GrowthFunction::polynomial(const Rational& gamma) {
  if (gamma <= 0) throw domain_error("polynomial growth needs gamma > 0");
  Eval eval;
  if (gamma.get_den() == 1) {
    BigInt g = gamma.get_num();
    eval = [g](long n, mpfr_prec_t) {
      BigInt v;
      mpz_pow_ui(v.get_mpz_t(), BigInt(n).get_mpz_t(), g.get_ui());
      return Scalar::exact(Rational(v));
    };
  } else {
    Rational g = gamma;
    eval = [g](long n, mpfr_prec_t prec) {
      if (n == 1) return Scalar::exact(Rational(1));
      auto base = CertifiedReal::exact(n, prec);
      return Scalar::certified(base.pow(CertifiedReal::from_rational(g, prec)));
    };
  }
  std::ostringstream desc;
  desc << "n^" << gamma.get_str();
  // (n+1)^gamma / n^gamma -> 1 for every fixed gamma.
  return GrowthFunction(GrowthKind::polynomial, desc.str(), std::move(eval),
                        Rational(1), false);
}

GrowthFunction GrowthFunction::geometric(const Rational& base, const Rational& scale) {
  if (base <= 1) throw domain_error("geometric growth needs base > 1");
  if (scale <= 0) throw domain_error("geometric growth needs scale > 0");
  Rational b = base, c = scale;
  Eval eval = [b, c](long n, mpfr_prec_t) {
    BigInt num, den;
    mpz_pow_ui(num.get_mpz_t(), b.get_num().get_mpz_t(), n);
    mpz_pow_ui(den.get_mpz_t(), b.get_den().get_mpz_t(), n);
    Rational r = c * Rational(num, den);
    r.canonicalize();
    return Scalar::exact(r);
  };
  std::ostringstream desc;
  desc << scale.get_str() << "*" << base.get_str() << "^n";
  return GrowthFunction(GrowthKind::geometric, desc.str(), std::move(eval), b, false);
}

GrowthFunction GrowthFunction::factorial_block() {
  Eval eval = [](long n, mpfr_prec_t) {
    // Largest k with k! <= n.
    unsigned long k = 1;
    BigInt fact = 1;  // k!
    for (;;) {
      BigInt next;
      mpz_fac_ui(next.get_mpz_t(), k + 1);
      if (next > n) break;
      fact = next;
      ++k;
    }
    BigInt v;
    mpz_fac_ui(v.get_mpz_t(), k + 2);
    return Scalar::exact(Rational(v));
  };
  return GrowthFunction(GrowthKind::factorial_block, "factorial_block",
                        std::move(eval), std::nullopt, true);
}

GrowthFunction GrowthFunction::table(std::vector<Rational> values) {
  for (const auto& v : values)
    if (v <= 0) throw domain_error("table growth values must be positive");
  auto data = std::make_shared<std::vector<Rational>>(std::move(values));
  Eval eval = [data](long n, mpfr_prec_t) {
    if (n < 1 || static_cast<size_t>(n) > data->size())
      throw domain_error("table growth function: n out of range");
    return Scalar::exact((*data)[n - 1]);
  };
  return GrowthFunction(GrowthKind::table, "table", std::move(eval),
                        std::nullopt, false);
}

GrowthFunction GrowthFunction::table_from_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw domain_error("cannot open table file: " + path);
  std::vector<std::pair<long, Rational>> rows;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    auto comma = line.find(',');
    if (comma == std::string::npos)
      throw domain_error("table row needs 'n,value': " + line);
    long n = std::stol(line.substr(0, comma));
    rows.emplace_back(n, parse_fraction(line.substr(comma + 1)));
  }
  std::sort(rows.begin(), rows.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  std::vector<Rational> values;
  for (const auto& [n, v] : rows) {
    if (n != static_cast<long>(values.size()) + 1)
      throw domain_error("table rows must cover n = 1,2,... without gaps");
    values.push_back(v);
  }
  return table(std::move(values));
}

GrowthFunction GrowthFunction::expression(std::string description, Eval eval,
                                          std::optional<Rational> known_b,
                                          bool b_infinite) {
  return GrowthFunction(GrowthKind::expression, std::move(description),
                        std::move(eval), std::move(known_b), b_infinite);
}

Scalar GrowthFunction::operator()(long n, mpfr_prec_t prec) const {
  if (n < 0) throw domain_error("growth function needs n >= 0");
  if (n == 0) return Scalar::exact(Rational(0));  // psi(0) = 0 convention
  Scalar v = eval_(n, prec);
  if (v.is_exact()) {
    if (v.rational() <= 0) throw domain_error("psi(n) must be positive");
  } else if (!v.enclosure().is_positive()) {
    throw domain_error("psi(n) enclosure not certified positive");
  }
  return v;
}

Scalar GrowthFunction::increment(long k, mpfr_prec_t prec) const {
  if (k < 1) throw domain_error("increment needs k >= 1");
  return (*this)(k, prec) - (*this)(k - 1, prec);
}

LimsupDiagnostic limsup_ratio(const GrowthFunction& psi, long horizon,
                              std::vector<long> tail_starts,
                              const LimsupConfig& cfg) {
  if (tail_starts.empty()) throw domain_error("limsup_ratio needs tail starts");
  std::sort(tail_starts.begin(), tail_starts.end());
  if (tail_starts.front() < 1) throw domain_error("tail starts must be >= 1");
  if (horizon < tail_starts.back() + 2)
    throw domain_error("horizon must be >= max(tail_starts) + 2");

  // ratios[n - 1] = psi(n+1)/psi(n) for n = 1..horizon-1.
  std::vector<Scalar> ratios;
  ratios.reserve(horizon - 1);
  Scalar prev = psi(1);
  for (long n = 1; n < horizon; ++n) {
    Scalar next = psi(n + 1);
    ratios.push_back(next / prev);
    prev = std::move(next);
  }

  LimsupDiagnostic diag;
  diag.horizon = horizon;
  diag.tail_starts = tail_starts;

  for (long t : tail_starts) {
    Scalar m = ratios[t - 1];
    for (long n = t + 1; n < horizon; ++n) m = Scalar::max(m, ratios[n - 1]);
    diag.window_maxima.push_back(m);
  }
  diag.b_hat = diag.window_maxima.back();

  Scalar running = ratios[0];
  diag.records.emplace_back(1, running.to_double());
  for (long n = 2; n < horizon; ++n) {
    if (ratios[n - 1].compare(running) > 0) {
      running = ratios[n - 1];
      diag.records.emplace_back(n, running.to_double());
    }
  }
  const auto& rec = diag.records;
  if (static_cast<int>(rec.size()) >= cfg.record_count) {
    bool late = rec.back().first >=
                static_cast<long>(static_cast<double>(horizon) * cfg.late_fraction);
    bool growing = true;
    for (size_t i = rec.size() - cfg.record_count + 1; i < rec.size(); ++i) {
      if (rec[i].second < cfg.record_factor * rec[i - 1].second) growing = false;
    }
    diag.divergence_flag = late && growing;
  }
  return diag;
}

SuperlinearityReport superlinearity_check(const GrowthFunction& psi, long horizon) {
  if (horizon < 10) throw domain_error("superlinearity_check needs horizon >= 10");
  SuperlinearityReport rep;
  rep.horizon = horizon;

  std::vector<Scalar> slope;
  slope.reserve(horizon);
  for (long n = 1; n <= horizon; ++n)
    slope.push_back(psi(n) / Scalar::exact(Rational(n)));

  for (int d = 0; d < 10; ++d) {
    long lo = d * horizon / 10 + 1;
    long hi = (d + 1) * horizon / 10;
    Scalar m = slope[lo - 1];
    for (long n = lo + 1; n <= hi; ++n) m = Scalar::min(m, slope[n - 1]);
    rep.decile_minima.push_back(m);
  }

  long half = horizon / 2;
  Scalar m = slope[half - 1];
  for (long n = half + 1; n <= horizon; ++n) m = Scalar::min(m, slope[n - 1]);
  rep.last_half_min = m;

  rep.passed = true;
  for (int d = 0; d < 5; ++d) {
    if (rep.last_half_min.compare(rep.decile_minima[d]) <= 0) rep.passed = false;
  }
  return rep;
}

EquivalenceReport increasing_equivalence_check(const GrowthFunction& psi,
                                               long horizon, double tolerance) {
  if (horizon < 10) throw domain_error("equivalence check needs horizon >= 10");
  if (tolerance <= 0) throw domain_error("tolerance must be positive");

  EquivalenceReport rep;
  rep.horizon = horizon;
  rep.tolerance = tolerance;

  Scalar running_max = psi(1);
  Scalar sup = Scalar::exact(Rational(0));
  long argmax = horizon / 2;
  for (long n = 2; n <= horizon; ++n) {
    Scalar v = psi(n);
    running_max = Scalar::max(running_max, v);
    if (n >= horizon / 2) {
      Scalar dev = (v / running_max).abs_minus_one();
      if (dev.compare(sup) > 0) {
        sup = dev;
        argmax = n;
      }
    }
  }
  rep.sup_deviation = sup.to_double();
  rep.argmax = argmax;
  Rational tol(tolerance);
  tol.canonicalize();
  rep.equivalent = sup.compare(Scalar::exact(tol)) <= 0;
  return rep;
}

std::vector<long> limsup_witness_indices(const GrowthFunction& psi, long horizon,
                                         const Rational& epsilon, const Scalar& b) {
  if (epsilon <= 0 || epsilon >= 1)
    throw domain_error("witness search needs epsilon in (0,1)");
  if (horizon < 2) throw domain_error("witness search needs horizon >= 2");
  Scalar threshold = b * Scalar::exact(Rational(1) - epsilon);
  std::vector<long> hits;
  Scalar prev = psi(1);
  for (long n = 1; n < horizon; ++n) {
    Scalar next = psi(n + 1);
    bool ratio_ok = (next / prev).compare(threshold) >= 0;
    bool small_ok =
        Scalar::exact(Rational(n)).compare(Scalar::exact(epsilon) * prev) <= 0;
    if (ratio_ok && small_ok) hits.push_back(n);
    prev = std::move(next);
  }
  return hits;
}

}  // namespace cfs
