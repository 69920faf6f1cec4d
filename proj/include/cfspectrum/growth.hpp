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

#ifndef CFSPECTRUM_GROWTH_HPP_
#define CFSPECTRUM_GROWTH_HPP_

#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cfspectrum/numeric.hpp"
#include "cfspectrum/real.hpp"

namespace cfs {

// Exact rational where the math allows it, certified enclosure otherwise.
// Arithmetic stays exact as long as both operands are exact.
class Scalar {
 public:
  Scalar() : exact_(Rational(0)) {}
  static Scalar exact(Rational v);
  static Scalar certified(CertifiedReal v);

  bool is_exact() const { return exact_.has_value(); }
  const Rational& rational() const;
  CertifiedReal enclosure(mpfr_prec_t prec = kDefaultPrec) const;
  double to_double() const;
  // Midpoint of the enclosure; the exact value when exact.
  Rational mid() const;

  Scalar operator+(const Scalar& o) const;
  Scalar operator-(const Scalar& o) const;
  Scalar operator*(const Scalar& o) const;
  Scalar operator/(const Scalar& o) const;
  Scalar abs_minus_one() const;  // |x - 1|

  // Midpoint order; exact order when both sides are exact.
  int compare(const Scalar& o) const;
  static Scalar max(const Scalar& a, const Scalar& b);
  static Scalar min(const Scalar& a, const Scalar& b);

 private:
  std::optional<Rational> exact_;
  std::optional<CertifiedReal> approx_;
};

enum class GrowthKind { polynomial, geometric, factorial_block, table, expression };

// A growth function psi: N -> R_+ with psi(0) = 0 by convention. Preset
// kinds evaluate exactly (rational) or as certified enclosures at the
// requested precision, and carry the known value of
// b = limsup psi(n+1)/psi(n) where the preset determines it.
class GrowthFunction {
 public:
  using Eval = std::function<Scalar(long n, mpfr_prec_t prec)>;

  static GrowthFunction polynomial(const Rational& gamma);  // n^gamma
  static GrowthFunction geometric(const Rational& base, const Rational& scale = Rational(1));
  // psi(n) = (k+2)! on the block k! <= n < (k+1)!.
  static GrowthFunction factorial_block();
  static GrowthFunction table(std::vector<Rational> values);  // values[i] = psi(i+1)
  static GrowthFunction table_from_csv(const std::string& path);
  static GrowthFunction expression(std::string description, Eval eval,
                                   std::optional<Rational> known_b = std::nullopt,
                                   bool b_infinite = false);

  // psi(n); requires n >= 0, and psi(n) > 0 for n >= 1.
  Scalar operator()(long n, mpfr_prec_t prec = kDefaultPrec) const;
  // psi(k) - psi(k-1); the construction consumes increments from k = 1.
  Scalar increment(long k, mpfr_prec_t prec = kDefaultPrec) const;

  GrowthKind kind() const { return kind_; }
  const std::string& description() const { return description_; }
  const std::optional<Rational>& known_b() const { return known_b_; }
  bool known_b_infinite() const { return b_infinite_; }

 private:
  GrowthFunction(GrowthKind kind, std::string description, Eval eval,
                 std::optional<Rational> known_b, bool b_infinite);

  GrowthKind kind_;
  std::string description_;
  Eval eval_;
  std::optional<Rational> known_b_;
  bool b_infinite_;
};

struct LimsupConfig {
  // Divergence heuristic: the running maximum of the ratio sequence keeps
  // setting records late in the horizon, each record beating the previous
  // one by at least this factor.
  double record_factor = 1.1;
  int record_count = 3;
  double late_fraction = 0.5;  // last record must fall in the tail half
};

struct LimsupDiagnostic {
  long horizon = 0;
  std::vector<long> tail_starts;
  // window_maxima[i] = max of psi(n+1)/psi(n) over tail_starts[i] <= n < horizon;
  // non-increasing in the tail start.
  std::vector<Scalar> window_maxima;
  Scalar b_hat;  // maximum over the largest tail start
  bool divergence_flag = false;
  std::vector<std::pair<long, double>> records;  // running-max record positions
};

// Finite-horizon stand-in for b = limsup psi(n+1)/psi(n). A diagnostic,
// not a limit: horizons and trends are reported so callers can judge.
LimsupDiagnostic limsup_ratio(const GrowthFunction& psi, long horizon,
                              std::vector<long> tail_starts,
                              const LimsupConfig& cfg = {});

struct SuperlinearityReport {
  long horizon = 0;
  Scalar last_half_min;  // min of psi(n)/n over [horizon/2, horizon]
  std::vector<Scalar> decile_minima;
  bool passed = false;  // last-half min strictly above each first-half decile min
};
SuperlinearityReport superlinearity_check(const GrowthFunction& psi, long horizon);

struct EquivalenceReport {
  long horizon = 0;
  double tolerance = 0;
  double sup_deviation = 0;  // sup over [horizon/2, horizon] of |psi/psi* - 1|
  long argmax = 0;
  bool equivalent = false;
};
// Heuristic proxy for "psi is equivalent to an increasing function":
// compares psi to its running maximum psi* on the tail of the horizon.
EquivalenceReport increasing_equivalence_check(const GrowthFunction& psi,
                                               long horizon, double tolerance);

// Best-effort search for indices with psi(n+1) >= psi(n) b (1 - eps) and
// n <= eps psi(n). Such indices exist unboundedly by the definition of the
// limsup; the finite-horizon hits are a diagnostic, never a proof.
std::vector<long> limsup_witness_indices(const GrowthFunction& psi, long horizon,
                                         const Rational& epsilon, const Scalar& b);

}  // namespace cfs

#endif  // CFSPECTRUM_GROWTH_HPP_
