// Copyright 2026 The realalg Authors
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

#ifndef REALALG_TESTS_TEST_UTIL_H_
#define REALALG_TESTS_TEST_UTIL_H_

#include <random>
#include <vector>

#include "realalg/rational.hpp"
#include "realalg/unipoly.hpp"

namespace realalg::testutil {

// Deterministic random rationals with numerator/denominator bounded by
// `bound` (denominator positive).
inline Rational random_rational(std::mt19937& rng, int bound = 10) {
  std::uniform_int_distribution<int> num(-bound, bound);
  std::uniform_int_distribution<int> den(1, bound);
  return Rational(Int(num(rng)), Int(den(rng)));
}

inline Rational random_nonzero_rational(std::mt19937& rng, int bound = 10) {
  for (;;) {
    Rational r = random_rational(rng, bound);
    if (!r.is_zero()) return r;
  }
}

// Random monic polynomial of exactly the given degree.
inline MonicPoly random_monic(std::mt19937& rng, int degree, int bound = 10) {
  std::vector<Rational> coeffs(degree + 1, Rational(0));
  coeffs[degree] = 1;
  for (int k = 0; k < degree; ++k) coeffs[k] = random_rational(rng, bound);
  return MonicPoly(UniPoly(std::move(coeffs)));
}

inline UniPoly random_poly(std::mt19937& rng, int max_degree, int bound = 10) {
  std::uniform_int_distribution<int> deg(0, max_degree);
  int d = deg(rng);
  std::vector<Rational> coeffs(d + 1, Rational(0));
  for (int k = 0; k <= d; ++k) coeffs[k] = random_rational(rng, bound);
  return UniPoly(std::move(coeffs));
}

}  // namespace realalg::testutil

#endif  // REALALG_TESTS_TEST_UTIL_H_
