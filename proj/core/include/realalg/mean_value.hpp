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

#ifndef REALALG_MEAN_VALUE_H_
#define REALALG_MEAN_VALUE_H_

#include <vector>

#include "realalg/unipoly.hpp"

namespace realalg {

// Checks the exact mean-value identity
//   f(b) - f(a) = (b - a) * sum_i weights[i] * f'(a + lambdas[i] * (b - a))
// for the given node/weight family. Requires deg(f) <= lambdas.size().
bool check_mean_value(const UniPoly& f, const Rational& a, const Rational& b,
                      const std::vector<Rational>& lambdas, const std::vector<Rational>& weights);

// The degree-4 node family (1/6, 1/3, 2/3, 5/6) with weights
// (1/3, 1/6, 1/6, 1/3): exact for every polynomial of degree <= 4.
std::vector<Rational> mean_value_nodes_deg4();
std::vector<Rational> mean_value_weights_deg4();

}  // namespace realalg

#endif  // REALALG_MEAN_VALUE_H_
