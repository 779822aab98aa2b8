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

#ifndef REALALG_VIRTUAL_ROOTS_H_
#define REALALG_VIRTUAL_ROOTS_H_

#include <vector>

#include "realalg/real_algebraic.hpp"
#include "realalg/unipoly.hpp"

namespace realalg {

// An interval endpoint that may be infinite. The level-(d) conventions put
// a signed infinity at index 0 and +infinity at index d+1; positionally the
// index-0 endpoint always acts as -infinity.
struct ExtendedBound {
  enum class Kind { NegInf, Finite, PosInf };

  Kind kind = Kind::Finite;
  RealAlgebraic value;

  static ExtendedBound neg_inf() { return {Kind::NegInf, RealAlgebraic()}; }
  static ExtendedBound pos_inf() { return {Kind::PosInf, RealAlgebraic()}; }
  static ExtendedBound finite(RealAlgebraic v) { return {Kind::Finite, std::move(v)}; }

  bool is_finite() const { return kind == Kind::Finite; }
  std::string str() const;
};

// Order with infinities; finite values compare through algebraic_compare.
int extended_compare(const ExtendedBound& a, const ExtendedBound& b);

// The unique minimizer of |f| on [a, b], given that sigma * f' > 0 on the
// open interval (the caller guarantees this; the triangle recursion knows
// it from parity). Infinite endpoints are internally replaced by -B / +B
// where B is the Cauchy bound of f, which dominates every relevant root.
RealAlgebraic interval_min_abs(const MonicPoly& f, const ExtendedBound& a, const ExtendedBound& b,
                               int sigma);

// The triangle of virtual roots rho[delta][j], 1 <= j <= delta <= d, where
// level delta holds the virtual roots of f^[d - delta]. Immutable after
// construction; value semantics.
class VirtualRootTriangle {
 public:
  static VirtualRootTriangle build(const MonicPoly& f);

  int degree() const { return static_cast<int>(rho_.size()); }
  const MonicPoly& poly() const { return f_; }
  const Rational& bound() const { return bound_; }

  // 1-based indices: rho(delta, j) with 1 <= j <= delta <= degree().
  const RealAlgebraic& rho(int delta, int j) const;
  // Top row (level d) as a vector, index 0 holding rho(d, 1).
  const std::vector<RealAlgebraic>& top_row() const { return rho_.back(); }
  const std::vector<std::vector<RealAlgebraic>>& levels() const { return rho_; }

  // f^[k] for 0 <= k < d.
  const MonicPoly& normalized_deriv(int k) const { return derivs_.at(k); }
  // f* = product of the f^[k], 0 <= k < d.
  UniPoly fstar() const;

  // The monotonicity sign of f^[d - delta] on the interval feeding
  // rho(delta, j): +1 iff delta - j is even.
  static int sigma(int delta, int j) { return (delta - j) % 2 == 0 ? 1 : -1; }

  // Level-d endpoint conventions: j = 0 gives the signed infinity at the
  // left, j = d + 1 gives +infinity.
  ExtendedBound top_entry_extended(int j) const;

 private:
  MonicPoly f_;
  std::vector<std::vector<RealAlgebraic>> rho_;
  Rational bound_;
  std::vector<MonicPoly> derivs_;

  explicit VirtualRootTriangle(MonicPoly f) : f_(std::move(f)) {}
};

inline VirtualRootTriangle virtual_roots(const MonicPoly& f) {
  return VirtualRootTriangle::build(f);
}

// Budan-Fourier index at a rational point a where no normalized derivative
// vanishes: r counts the sign changes in (f^[d](a), ..., f^[0](a)) and the
// top row brackets a as rho(d, d-r) < a < rho(d, d-r+1).
struct BudanFourierResult {
  int r = 0;
  ExtendedBound bracket_lo, bracket_hi;
  std::vector<Rational> derivative_values;  // ordered k = d ... 0
};
BudanFourierResult budan_fourier_index(const VirtualRootTriangle& t, const Rational& a);

// Intermediate value witness: with a < b and f(a) f(b) < 0, the clamped
// values mu_j = a max (b min rho(d, j)) contain an exact zero of f;
// zero_index is the smallest such j (1-based).
struct IvtWitness {
  std::vector<RealAlgebraic> mu;
  int zero_index = 0;
};
IvtWitness ivt_witness(const VirtualRootTriangle& t, const RealAlgebraic& a,
                       const RealAlgebraic& b);

// Exact extrema of f on [a, b] (a < b), the minimum of |f|, and the
// constant-sign flag: +1/-1 when f has that strict sign on all of [a, b],
// else 0.
struct IntervalExtrema {
  RealAlgebraic inf, sup, inf_abs;
  int constant_sign = 0;
};
IntervalExtrema interval_extrema(const VirtualRootTriangle& t, const RealAlgebraic& a,
                                 const RealAlgebraic& b);

// Triangle of g(x) = x^d + sum_k c^{d-k} a_k x^k. The transformed top rows
// (scaling for c >= 0, scaling plus reversal for c <= 0) are verified
// against a fresh computation before returning it.
VirtualRootTriangle rescale_roots(const VirtualRootTriangle& t, const Rational& c);

}  // namespace realalg

#endif  // REALALG_VIRTUAL_ROOTS_H_
