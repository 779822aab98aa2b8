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

#ifndef REALALG_SEMIPOLY_COMPARE_H_
#define REALALG_SEMIPOLY_COMPARE_H_

#include <vector>

#include "realalg/sup_inf_nf.hpp"

namespace realalg {

struct SemipolyCompareResult {
  bool equal = false;
  // Populated when !equal: a rational point where the functions differ,
  // with both values.
  Rational witness, lhs, rhs;
};

// Decides whether two univariate semipolynomial terms define the same
// function on the rationals (equivalently on the real algebraic numbers).
// Both functions are piecewise polynomial with breakpoints among the roots
// of the pairwise differences of their normal-form entries; agreement of
// the selected polynomial on every open cell plus agreement at every
// breakpoint decides equality exactly. Throws if the terms mention more
// than one variable in total.
SemipolyCompareResult univar_semipoly_compare(const Term& s1, const Term& s2);

// Tri_k(values) = min over the k-subsets of the max over the subset, for
// k = 1..n: the values in increasing order, duplicates preserved. Throws
// on empty input.
std::vector<Rational> tri_sort(std::vector<Rational> values);

}  // namespace realalg

#endif  // REALALG_SEMIPOLY_COMPARE_H_
