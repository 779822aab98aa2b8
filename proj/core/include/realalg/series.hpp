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

#ifndef REALALG_SERIES_H_
#define REALALG_SERIES_H_

#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "realalg/rational.hpp"

namespace realalg {

// Lazy formal power series over the rationals, the ordered-ring model
// where sign information is only ever obtained through the potential signs
//   kappa_0 = sign c_0;  kappa_{k+1} = kappa_k if kappa_k != 0 else sign c_{k+1}.
// Coefficients are produced by a rule and memoized; recursive rules
// (inverse, frac, Newton roots) may read strictly earlier coefficients of
// the series being defined, which the compute order enforces. Handles are
// cheap shared references; the per-series cache is internally serialized,
// and cached coefficients are immutable once computed.
class LazySeries {
 public:
  LazySeries();  // the zero series

  // Rule access to earlier coefficients of the series being defined.
  class SelfView {
   public:
    Rational coeff(size_t j) const;

   private:
    friend class LazySeries;
    explicit SelfView(const void* impl) : impl_(impl) {}
    const void* impl_;
  };
  using Rule = std::function<Rational(size_t k, const SelfView& self)>;

  static LazySeries constant(const Rational& c);
  static LazySeries epsilon();  // the positive infinitesimal
  // Polynomial in epsilon: coeffs[j] is the coefficient of epsilon^j.
  static LazySeries from_coeffs(std::vector<Rational> coeffs);
  static LazySeries from_rule(Rule rule);
  static LazySeries geometric();  // sum of epsilon^k = (1 - epsilon)^{-1}

  Rational coeff(size_t k) const;
  // kappa_k, memoized along with the coefficients.
  int sign_potential(size_t k) const;
  // v(xi) > k  iff  kappa_k = 0.
  bool valuation_exceeds(size_t k) const { return sign_potential(k) == 0; }

  std::vector<Rational> prefix(size_t count) const;

  friend LazySeries operator+(const LazySeries& a, const LazySeries& b);
  friend LazySeries operator-(const LazySeries& a, const LazySeries& b);
  friend LazySeries operator*(const LazySeries& a, const LazySeries& b);
  LazySeries operator-() const;
  friend LazySeries operator*(const Rational& c, const LazySeries& s);

  // Multiplication by epsilon^m.
  LazySeries shift_up(size_t m) const;

  std::string pretty(size_t count) const;

 private:
  struct Impl;
  std::shared_ptr<Impl> impl_;
};

// |xi|: c_k(|xi|) = kappa_k(xi) c_k(xi).
LazySeries series_abs(const LazySeries& xi);
// xi sup zeta = (xi + zeta + |xi - zeta|) / 2, and the dual inf.
LazySeries series_sup(const LazySeries& a, const LazySeries& b);
LazySeries series_inf(const LazySeries& a, const LazySeries& b);

// Multiplicative inverse of a unit (kappa_0 = +-1): the depth-0 witness is
// required, and its absence is a not-a-unit error, not a sign test.
LazySeries series_inverse(const LazySeries& xi);

// FRAC: given 0 <= xi <= zeta (probed up to `fuel`), the unique rho with
// rho * zeta = xi^2 and 0 <= rho <= xi. When zeta's valuation is not
// resolved within the fuel, the result is Unknown with the (all zero)
// coefficients resolved so far.
struct FracResult {
  bool resolved = false;
  LazySeries rho;                 // when resolved
  std::vector<Rational> prefix;   // coefficients 0..fuel when unknown
};
FracResult series_frac(const LazySeries& xi, const LazySeries& zeta, size_t fuel);

// OTF split: when kappa_k(xi + zeta) = 1, one summand carries a positivity
// witness at the sum's first nonzero index; otherwise Unknown.
enum class OtfSplit { Left, Right, Unknown };
OtfSplit series_otf_split(const LazySeries& xi, const LazySeries& zeta, size_t k);

// Polynomial over series, P(X) = sum coeffs[i] X^i.
struct SeriesPoly {
  std::vector<LazySeries> coeffs;

  LazySeries eval(const LazySeries& x) const;
  SeriesPoly derivative() const;
};

// Newton-Hensel root: requires v(P(0)) > 0 and v(P'(0)) = 0, witnessed at
// depth 0; returns the unique root with positive valuation.
LazySeries hensel_newton_root(const SeriesPoly& p);

// Element epsilon^shift * body of the Laurent localization.
struct LaurentElement {
  long shift = 0;
  LazySeries body;

  Rational coeff(long k) const;
  int sign_potential(long k) const;
};

// The shifted-coefficient equality, probed up to `fuel` (indices of the
// aligned bodies): true means "equal as far as probed".
bool laurent_eq_upto(const LaurentElement& a, const LaurentElement& b, size_t fuel);

// --- text forms (CLI) ---------------------------------------------------

// Parses a polynomial in `e` (e.g. "1 - 2*e + e^3", or the builtin name
// "geom"); used by the command line front end.
LazySeries parse_series_expr(const std::string& text);

// Parses a polynomial in x whose coefficients are polynomials in e, e.g.
// "x^2 + x - e", for the Newton root command.
SeriesPoly parse_series_poly(const std::string& text);

}  // namespace realalg

#endif  // REALALG_SERIES_H_
