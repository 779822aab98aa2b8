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

#include "realalg/mean_value.hpp"

#include <stdexcept>

namespace realalg {

bool check_mean_value(const UniPoly& f, const Rational& a, const Rational& b,
                      const std::vector<Rational>& lambdas, const std::vector<Rational>& weights) {
  if (lambdas.size() != weights.size())
    throw std::domain_error("check_mean_value: node and weight counts differ");
  if (f.degree() > static_cast<int>(lambdas.size()))
    throw std::domain_error("check_mean_value: deg(f) exceeds the node count");
  const UniPoly df = f.derivative();
  const Rational delta = b - a;
  Rational rhs = 0;
  for (size_t i = 0; i < lambdas.size(); ++i) rhs += weights[i] * df.eval(a + lambdas[i] * delta);
  return f.eval(b) - f.eval(a) == delta * rhs;
}

std::vector<Rational> mean_value_nodes_deg4() {
  return {Rational(1, 6), Rational(1, 3), Rational(2, 3), Rational(5, 6)};
}

std::vector<Rational> mean_value_weights_deg4() {
  return {Rational(1, 3), Rational(1, 6), Rational(1, 6), Rational(1, 3)};
}

}  // namespace realalg
