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

#ifndef REALALG_COMPLEX_SQRT_H_
#define REALALG_COMPLEX_SQRT_H_

#include <vector>

#include "realalg/real_algebraic.hpp"

namespace realalg {

// Element p + q * sqrt(n) of the quadratic extension Q(sqrt(n)); the exact
// coefficient field of the factor polynomials below.
struct QuadExt {
  Rational p, q;

  static QuadExt rational(Rational r) { return {std::move(r), Rational(0)}; }
  bool operator==(const QuadExt&) const = default;
};

QuadExt quad_add(const QuadExt& a, const QuadExt& b);
QuadExt quad_sub(const QuadExt& a, const QuadExt& b);
QuadExt quad_mul(const QuadExt& a, const QuadExt& b, const Rational& n);

// Polynomial with real algebraic coefficients; coeffs[k] is the
// coefficient of Z^k. Storage only (enough for the square-root covering).
struct AlgPoly {
  std::vector<RealAlgebraic> coeffs;
};

// The covering of the square roots of c = a + ib by the two real quadratic
// factors f1 = (Z - z1)(Z - conj z1) and f2 = (Z + z1)(Z + conj z1):
//   u = sqrt((a + sqrt(a^2 + b^2)) / 2), the nonnegative root of
//       4 X^4 - 4 a X^2 - b^2,
//   v likewise with a replaced by -a, sign-adjusted so u * v * b >= 0,
//   z1 = u + iv, and g(Z^2) = f1 * f2 for g = (Z - c)(Z - conj c).
// identity_ok reports the exact check of that polynomial identity in
// Q(sqrt(a^2 + b^2)); z1_squared_ok the exact check of z1^2 = a + ib.
struct ComplexSqrtCover {
  RealAlgebraic u, v;
  AlgPoly f1, f2;
  bool identity_ok = false;
  bool z1_squared_ok = false;
};

ComplexSqrtCover complex_sqrt_cover(const Rational& a, const Rational& b);

}  // namespace realalg

#endif  // REALALG_COMPLEX_SQRT_H_
