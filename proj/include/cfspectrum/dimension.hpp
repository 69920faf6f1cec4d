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

#ifndef CFSPECTRUM_DIMENSION_HPP_
#define CFSPECTRUM_DIMENSION_HPP_

#include <utility>
#include <vector>

#include "cfspectrum/constructors.hpp"
#include "cfspectrum/growth.hpp"
#include "cfspectrum/numeric.hpp"

namespace cfs {

// Every estimator reports its horizon and trend data; tail-window extrema
// stand in for liminf/limsup and are never claimed as limits.
struct DimensionEstimate {
  Scalar value;  // in [0,1]; exact rational for closed-form methods
  std::string method;
  long horizon = 0;
  bool empty_set = false;     // equivalence diagnostic failed: E(psi) empty
  bool b_infinite = false;    // limsup diverged; dimension pinned to 0
  bool diagnostics_ok = true;
  std::vector<double> trend;
};

// liminf proxy for log(s_1...s_n) / (2 log(s_1...s_n) + log s_{n+1}):
// the minimum of the ratio over the tail window [horizon/2, horizon].
// Requires the running average (1/n) sum s_k to grow across the sampled
// range, else domain_error.
DimensionEstimate lemma31_dimension(const SSeq& s, long horizon);

// 1/(1+b) with b from the limsup diagnostic; exact for preset kinds with
// known b (geometric base b, polynomial b = 1, factorial blocks b = inf).
// Equivalence failure flags the empty set; superlinearity failure flags
// the diagnostics.
DimensionEstimate fast_khintchine_dimension(const GrowthFunction& psi,
                                            long horizon,
                                            double equiv_tolerance = 1e-2);

// (2/(2+beta), 1/(2+beta)): upper bound for the Jarnik set and the exact
// dimension of its fast-growth subset.
std::pair<Rational, Rational> jarnik_bounds(const Rational& beta);

struct BetaExponent {
  Rational b;
  Rational epsilon;
  Rational beta;           // (1-eps)(b(1-eps)^2/(1+eps) - 1)
  Rational induced_bound;  // (1+eps)/(2+beta)
  bool positive = false;   // beta > 0 iff b(1-eps)^2 > 1+eps
};
BetaExponent beta_exponent(const Rational& b, const Rational& epsilon);

// Per-level certified brackets of the covering sums for the F-set family:
// at level n the cover consists of prod (ell-1) s_k unions of child
// cylinders with a_{n+1} ranging over [s_{n+1}, ell s_{n+1}); the bracket
// encloses log sum |J_n|^s via the diameter and product bounds.
struct CoveringLevel {
  long n = 0;
  double log_lower = 0;
  double log_upper = 0;
};
struct CoveringTrace {
  std::vector<CoveringLevel> levels;
  bool upper_tail_decreasing = false;  // upper bounds fall over the tail
  bool lower_tail_increasing = false;  // lower bounds rise over the tail
};
CoveringTrace covering_sum_trace(const SSeq& s, long ell,
                                 const Rational& s_exponent, long depth);

// Least-squares slope of log N(delta) against log(1/delta) over dyadic
// scales delta = 2^-j. Bins are half-open; boundary points go right.
struct BoxCountingResult {
  DimensionEstimate estimate;
  std::vector<std::pair<long, long>> scale_counts;  // (j, occupied bins)
  double slope_raw = 0;
  double residual = 0;  // RMS residual of the fit
};
BoxCountingResult box_counting(const std::vector<Rational>& points,
                               const std::vector<long>& dyadic_scales);

// Evaluation points of F-set samples at the given depth; used by the
// box-counting cross-checks and the CLI.
std::vector<Rational> sample_f_points(const SSeq& s, long ell, long depth,
                                      long count, unsigned long seed);

}  // namespace cfs

#endif  // CFSPECTRUM_DIMENSION_HPP_
