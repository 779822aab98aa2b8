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

#ifndef REALALG_SUP_INF_NF_H_
#define REALALG_SUP_INF_NF_H_

#include <string>
#include <vector>

#include "realalg/lattice_term.hpp"
#include "realalg/multipoly.hpp"

namespace realalg {

// Sup-inf normal form: sup over the outer families of the inf of the inner
// polynomials. Deterministic but not canonical: families are deduplicated
// and ordered; function equality is decided semantically elsewhere.
struct SupInfNF {
  std::vector<std::string> vars;                 // the variable context, sorted
  std::vector<std::vector<MultiPoly>> families;  // outer sup, inner inf; never empty inner

  Rational eval(const std::vector<Rational>& point) const;
  Rational eval(const std::map<std::string, Rational>& point) const;
  std::string str() const;
};

// Rewrites a term into sup-inf normal form over its own variable context.
// The result defines the same function as the term on every totally
// ordered commutative ring containing the rationals; products are pushed
// through the lattice operations with the afr7 identity
//   a b+ = (a b /\ (a^2 + 1) b) \/ (-(a^2 + 1) b /\ 0).
SupInfNF to_sup_inf_nf(const Term& t);

// Same, over a caller-fixed variable context (superset of the term's).
SupInfNF to_sup_inf_nf(const Term& t, const std::vector<std::string>& vars);

// Drops families that are supersets of another family (their inf can never
// win the sup). Used where the form is internal; the public normal form
// keeps the plain deduplicated families.
void nf_absorb(SupInfNF& nf);

}  // namespace realalg

#endif  // REALALG_SUP_INF_NF_H_
