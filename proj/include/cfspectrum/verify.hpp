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

#ifndef CFSPECTRUM_VERIFY_HPP_
#define CFSPECTRUM_VERIFY_HPP_

#include <string>
#include <vector>

#include "cfspectrum/numeric.hpp"

namespace cfs {

// The verification harness re-derives every exact identity and inequality
// the library relies on, from seeded random inputs, and reports per-check
// pass counts. Exact checks run at zero tolerance.

struct CheckResult {
  std::string name;
  long trials = 0;
  long failures = 0;
  std::vector<std::string> messages;  // first few failure details
};

struct SuiteReport {
  std::string suite;
  std::vector<CheckResult> checks;

  long trials() const;
  long failures() const;
  bool passed() const { return failures() == 0; }
};

// Determinant identity, q_n lower bound, product bounds, exact cylinder
// diameters with their two-sided bounds, nesting, level-1 covering
// identity, and the bracketed q^-2 sums at levels 1 and 2.
SuiteReport verify_identities(long depth, long trials, unsigned long seed);

// expand(evaluate(w)) = w on canonical words; evaluate(expand(x)) = x on
// rationals.
SuiteReport verify_roundtrip(long trials, unsigned long seed);

// tail_union_diameter against truncated telescoping sums plus the exact
// remainder.
SuiteReport verify_tailunion(long trials, unsigned long seed);

// The explicit point of E(psi): frozen first quotients, membership windows,
// ratio bounds, sampler constraints and determinism, extension step.
SuiteReport verify_construction(unsigned long seed);

// Pressure values, measure product law, monotonicity, root normalization,
// consistency brackets, thresholds, and the measure-vs-q_n inequality.
SuiteReport verify_measures(long trials, unsigned long seed);

// Closed forms, the two dimension routes against each other, covering-sum
// dichotomy, and box-counting sanity.
SuiteReport verify_dimension(unsigned long seed);

std::vector<SuiteReport> verify_all(long depth, long trials, unsigned long seed);

// Cantor middle-third points: all sums of digits {0,2} up to the given
// ternary depth. 2^depth points.
std::vector<Rational> cantor_points(int depth);

// Box-counting estimates of one fixed 10^3-word F-family sample
// (s_k = 2^(2^k), ell = 2) truncated at depths 4..8, each fitted over a
// depth-matched dyadic window. Deeper truncations resolve finer structure,
// so the estimates fall toward the covering exponent 1/3 from above.
struct FTrendResult {
  std::vector<double> estimates;        // depths 4..8
  bool strictly_decreasing = false;
  bool stays_above_third = false;
};
FTrendResult f_family_box_trend(unsigned long seed);

}  // namespace cfs

#endif  // CFSPECTRUM_VERIFY_HPP_
