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

#ifndef REALALG_REAL_ALGEBRAIC_H_
#define REALALG_REAL_ALGEBRAIC_H_

#include <string>
#include <utility>
#include <vector>

#include "realalg/unipoly.hpp"

namespace realalg {

// A real algebraic number: either an exact rational, or an isolated root of
// a squarefree monic polynomial. For the isolated form the invariants are
//   defpoly(lo) != 0, defpoly(hi) != 0, lo < hi,
//   exactly one real root of defpoly lies in (lo, hi).
// Every decision (sign, order) is made exactly; intervals are only a
// search accelerator, never an approximation in the contract.
class RealAlgebraic {
 public:
  RealAlgebraic() : rational_(0), is_rational_(true) {}
  RealAlgebraic(Rational q) : rational_(std::move(q)), is_rational_(true) {}  // NOLINT
  RealAlgebraic(int n) : rational_(n), is_rational_(true) {}                  // NOLINT

  // Wraps the unique root of `defpoly` (squarefree, any nonzero leading
  // coefficient; it is normalized monic) inside (lo, hi). Collapses to the
  // rational form when that root is rational. Throws if the isolation
  // invariant does not hold.
  static RealAlgebraic from_root(const UniPoly& defpoly, const Rational& lo, const Rational& hi);

  bool is_rational() const { return is_rational_; }
  const Rational& rational_value() const;

  // Isolated-form accessors; throw std::logic_error on the rational form.
  const UniPoly& defpoly() const;
  const Rational& lower() const;
  const Rational& upper() const;

  // Shrinks the isolating interval (no-op on rationals).
  void refine();
  void refine_below(const Rational& width);

  double to_double() const;
  std::string str() const;

 private:
  friend int algebraic_sign(const UniPoly& g, const RealAlgebraic& a);
  friend int algebraic_compare(const RealAlgebraic& a, const RealAlgebraic& b);

  Rational rational_;
  bool is_rational_;
  UniPoly defpoly_;
  Rational lo_, hi_;
};

// Exact sign of g at the algebraic point: -1, 0 or +1. Zero is decided by
// a gcd with the defining polynomial, never by refinement alone.
int algebraic_sign(const UniPoly& g, const RealAlgebraic& a);

// Exact total order: -1 (a < b), 0 (a = b), +1 (a > b). Equality is
// decided through the gcd of the defining polynomials plus interval
// overlap.
int algebraic_compare(const RealAlgebraic& a, const RealAlgebraic& b);

inline bool operator==(const RealAlgebraic& a, const RealAlgebraic& b) {
  return algebraic_compare(a, b) == 0;
}
inline bool operator!=(const RealAlgebraic& a, const RealAlgebraic& b) {
  return algebraic_compare(a, b) != 0;
}
inline bool operator<(const RealAlgebraic& a, const RealAlgebraic& b) {
  return algebraic_compare(a, b) < 0;
}
inline bool operator<=(const RealAlgebraic& a, const RealAlgebraic& b) {
  return algebraic_compare(a, b) <= 0;
}
inline bool operator>(const RealAlgebraic& a, const RealAlgebraic& b) {
  return algebraic_compare(a, b) > 0;
}
inline bool operator>=(const RealAlgebraic& a, const RealAlgebraic& b) {
  return algebraic_compare(a, b) >= 0;
}

RealAlgebraic algebraic_negate(const RealAlgebraic& a);
RealAlgebraic algebraic_scale(const RealAlgebraic& a, const Rational& c);
RealAlgebraic algebraic_abs(const RealAlgebraic& a);
RealAlgebraic algebraic_min(const RealAlgebraic& a, const RealAlgebraic& b);
RealAlgebraic algebraic_max(const RealAlgebraic& a, const RealAlgebraic& b);

// The distinct real roots of f in increasing order, each with its
// multiplicity in f. Throws on the zero polynomial.
std::vector<std::pair<RealAlgebraic, int>> isolate_real_roots(const UniPoly& f);

// f evaluated at an algebraic point, as a real algebraic number (via the
// resultant of the defining polynomial with y - f(x)).
RealAlgebraic eval_algebraic(const UniPoly& f, const RealAlgebraic& a);

}  // namespace realalg

#endif  // REALALG_REAL_ALGEBRAIC_H_
