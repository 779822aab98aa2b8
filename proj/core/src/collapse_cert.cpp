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

#include "realalg/collapse_cert.hpp"

#include <stdexcept>

namespace realalg {

namespace {

const MultiPoly& cited(const std::vector<MultiPoly>& set, size_t idx, const char* which) {
  if (idx >= set.size())
    throw std::invalid_argument(std::string("collapse certificate cites a polynomial absent from ") +
                                which + " (index " + std::to_string(idx) + ")");
  return set[idx];
}

}  // namespace

CollapseCheck check_collapse_certificate(const RingPresentation& pres,
                                         const CollapseCertificate& cert) {
  const size_t n = pres.generators.size();
  MultiPoly total(n);

  // s: product over the cited strictly positive generators (empty = 1).
  MultiPoly s = MultiPoly::constant(n, Rational(1));
  for (size_t idx : cert.s) s = s * cited(pres.gt0, idx, "R_gt0");
  total = total + s;

  // p: cone combination coeff * square^2 * product of cited generators.
  for (const ConeTerm& term : cert.p) {
    if (term.coeff.sign() <= 0)
      throw std::invalid_argument("collapse certificate cone term with nonpositive coefficient");
    MultiPoly acc = MultiPoly::constant(n, term.coeff);
    acc = acc * term.square * term.square;
    for (size_t idx : term.gt0_indices) acc = acc * cited(pres.gt0, idx, "R_gt0");
    for (size_t idx : term.geq0_indices) acc = acc * cited(pres.geq0, idx, "R_geq0");
    total = total + acc;
  }

  // z: ideal combination.
  for (const IdealTerm& term : cert.z)
    total = total + term.multiplier * cited(pres.eq0, term.eq0_index, "R_eq0");

  CollapseCheck out;
  out.accepted = total.is_zero();
  out.residual = std::move(total);
  return out;
}

}  // namespace realalg
