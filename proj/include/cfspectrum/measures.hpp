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

#ifndef CFSPECTRUM_MEASURES_HPP_
#define CFSPECTRUM_MEASURES_HPP_

#include <optional>
#include <string>

#include "cfspectrum/cfrac.hpp"
#include "cfspectrum/growth.hpp"
#include "cfspectrum/numeric.hpp"
#include "cfspectrum/real.hpp"

namespace cfs {

// Certified enclosure of zeta(t) = sum k^-t for t > 1, by series truncation
// with integral-test tail brackets. The truncation point grows until the
// enclosure width drops below target_error.
CertifiedReal zeta_enclosure(const Rational& t, double target_error,
                             long max_terms = (1L << 24));

// P(t) = log zeta(t); |enclosure width| <= target_error. Cached per
// (t, target_error): one computation, many readers.
CertifiedReal pressure(const Rational& t, double target_error = 1e-12);

// Certified enclosure of the partial sum  sum_{a=1..A} a^-t.
CertifiedReal zeta_partial_sum(const Rational& t, long A,
                               mpfr_prec_t prec = kDefaultPrec);
// Certified bracket of the tail  sum_{a>A} a^-t.
CertifiedReal zeta_tail_bracket(const Rational& t, long A,
                                mpfr_prec_t prec = kDefaultPrec);

// The cylinder measure mu_t(I_n(a_1..a_n)) = e^(-n P(t) - t sum log a_j),
// computed in log space with propagated error bounds. The empty word is
// the whole space and has measure exactly 1.
struct MuValue {
  CertifiedReal log_mu;
  CertifiedReal mu;  // exp(log_mu); positive, possibly astronomically small
};
MuValue mu(const Rational& t, const Word& w, double target_error = 1e-12);

// Brackets sum_{a<=A} mu_t(w.a) + certified tail against mu_t(w). Both
// sides are rigorous enclosures of the same real number, so they must
// overlap; a disjoint pair indicates a bug in the measure stack.
struct ConsistencyReport {
  Rational t;
  long alphabet_cap = 0;
  CertifiedReal children;  // bracket of the child sum including tail
  CertifiedReal parent;    // bracket of mu_t(w)
  bool overlap = false;
  double gap = 0;  // separation between the brackets; 0 when they overlap
  double children_width = 0;
  double parent_width = 0;
};
ConsistencyReport consistency_check(const Rational& t, const Word& w,
                                    long alphabet_cap);

// Least N in [1, horizon] such that n P(1 + eps/2) <= (eps/2)(1-eps) psi(n)
// holds for every n in [N, horizon]; nullopt when even n = horizon fails.
struct ThresholdResult {
  std::optional<long> n_epsilon;
  long horizon = 0;
  Rational t;  // 1 + eps/2
  CertifiedReal pressure_value;
};
ThresholdResult n_epsilon_threshold(const GrowthFunction& psi,
                                    const Rational& epsilon,
                                    long horizon = 4096);

// Checks q_n^-(1+eps) <= mu_{1+eps/2}(I_n(a_1..a_n)) for a word in the
// membership window at level n. Inapplicable (not a failure) when the
// preconditions do not hold.
enum class Ineq4Status { holds, fails, inapplicable, undecided };
struct Ineq4Report {
  Ineq4Status status = Ineq4Status::inapplicable;
  std::string reason;
  Rational t;
  CertifiedReal lhs_log;  // -(1+eps) log q_n
  CertifiedReal rhs_log;  // log mu_t(I_n)
};
Ineq4Report inequality4_check(const Rational& epsilon, const Word& w,
                              const GrowthFunction& psi, long n = -1,
                              std::optional<Rational> t_override = std::nullopt);

}  // namespace cfs

#endif  // CFSPECTRUM_MEASURES_HPP_
