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

#ifndef REALALG_COLLAPSE_CERT_H_
#define REALALG_COLLAPSE_CERT_H_

#include <string>
#include <vector>

#include "realalg/multipoly.hpp"

namespace realalg {

// Presentation of a proto-ordered ring structure: generators G and three
// sets of polynomials over them that are declared > 0, >= 0 and = 0.
struct RingPresentation {
  std::vector<std::string> generators;
  std::vector<MultiPoly> gt0, geq0, eq0;
};

// Collapse certificate s + p + z = 0:
//   s: a word in the multiplicative monoid generated by gt0 (indices,
//      with multiplicity; the empty word is 1),
//   p: a member of the cone generated by gt0 and geq0, presented as a sum
//      of terms  coeff * square^2 * product of cited generators,
//   z: a member of the ideal generated by eq0, presented as a sum of
//      terms  multiplier * eq0 member.
struct ConeTerm {
  Rational coeff;       // > 0
  MultiPoly square;     // squared in the expansion
  std::vector<size_t> gt0_indices;
  std::vector<size_t> geq0_indices;
};

struct IdealTerm {
  MultiPoly multiplier;
  size_t eq0_index = 0;
};

struct CollapseCertificate {
  std::vector<size_t> s;
  std::vector<ConeTerm> p;
  std::vector<IdealTerm> z;
};

struct CollapseCheck {
  bool accepted = false;
  MultiPoly residual;  // s + p + z when nonzero
};

// Expands the certificate in Q[G] and accepts iff s + p + z = 0 exactly.
// Throws std::invalid_argument when the certificate cites a polynomial
// absent from the declared sets or carries a nonpositive cone coefficient.
CollapseCheck check_collapse_certificate(const RingPresentation& pres,
                                         const CollapseCertificate& cert);

}  // namespace realalg

#endif  // REALALG_COLLAPSE_CERT_H_
