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

#ifndef REALALG_UNIPOLY_H_
#define REALALG_UNIPOLY_H_

#include <string>
#include <utility>
#include <vector>

#include "realalg/rational.hpp"

namespace realalg {

// Dense univariate polynomial over the rationals. coeff(k) is the
// coefficient of x^k; the representation never stores trailing zeros, so
// the zero polynomial has an empty coefficient vector and degree -1.
class UniPoly {
 public:
  UniPoly() = default;
  explicit UniPoly(std::vector<Rational> coeffs);

  static UniPoly zero() { return UniPoly(); }
  static UniPoly constant(const Rational& c);
  static UniPoly monomial(const Rational& c, size_t k);
  // x - no coefficient sugar.
  static UniPoly variable();

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  bool is_constant() const { return coeffs_.size() <= 1; }
  Rational coeff(size_t k) const { return k < coeffs_.size() ? coeffs_[k] : Rational(0); }
  const std::vector<Rational>& coeffs() const { return coeffs_; }
  Rational leading() const { return is_zero() ? Rational(0) : coeffs_.back(); }
  bool is_monic() const { return !is_zero() && coeffs_.back() == Rational(1); }

  Rational eval(const Rational& x) const;
  double eval_double(double x) const;

  UniPoly derivative() const;

  UniPoly operator-() const;
  friend UniPoly operator+(const UniPoly& a, const UniPoly& b);
  friend UniPoly operator-(const UniPoly& a, const UniPoly& b);
  friend UniPoly operator*(const UniPoly& a, const UniPoly& b);
  friend UniPoly operator*(const Rational& c, const UniPoly& p);
  friend bool operator==(const UniPoly& a, const UniPoly& b) { return a.coeffs_ == b.coeffs_; }
  friend bool operator!=(const UniPoly& a, const UniPoly& b) { return !(a == b); }

  // Euclidean division: returns (quotient, remainder) with
  // *this = q * d + r and deg r < deg d. Throws on zero divisor.
  std::pair<UniPoly, UniPoly> divmod(const UniPoly& d) const;

  // Scales so the leading coefficient is 1. Throws on the zero polynomial.
  UniPoly monic() const;

  // p(x/c) * c^deg and p(-x), used for root rescaling.
  UniPoly compose_scale(const Rational& c) const;
  UniPoly reflect() const;

  // Canonical text form, e.g. "x^3 - 6*x^2 + 11*x - 6". parse accepts the
  // grammar terms c, x, x^k, c*x^k joined by + and -; round-trips exactly.
  std::string str(const std::string& var = "x") const;
  static UniPoly parse(const std::string& text, const std::string& var = "x");

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

// Monic univariate polynomial of degree >= 1; the substrate of the virtual
// root construction. Validates at construction.
class MonicPoly {
 public:
  explicit MonicPoly(UniPoly p);
  const UniPoly& poly() const { return p_; }
  int degree() const { return p_.degree(); }
  friend bool operator==(const MonicPoly& a, const MonicPoly& b) { return a.p_ == b.p_; }

 private:
  UniPoly p_;
};

// f^[k]: the k-th derivative of f divided by its leading coefficient, a
// monic polynomial of degree deg(f) - k. Requires 0 <= k < deg(f).
MonicPoly normalized_derivative(const MonicPoly& f, unsigned k);

// Monic gcd; gcd(0, 0) = 0.
UniPoly poly_gcd(UniPoly a, UniPoly b);

// f / gcd(f, f'), normalized monic: same roots, all simple.
UniPoly squarefree_part(const UniPoly& f);

// Strict Cauchy bound: every real root r of f satisfies |r| < bound. For a
// monic f this is max(2, 1 + max_k |a_k|), which also dominates the bound
// of every normalized derivative of f.
Rational cauchy_root_bound(const UniPoly& f);

// Number of distinct real roots of f in the half-open interval (a, b],
// counted with a Sturm sequence of the squarefree part.
int sturm_count(const UniPoly& f, const Rational& a, const Rational& b);

// Sturm sequence of f (with f' as second entry), for callers that probe
// several points against the same polynomial.
class SturmSequence {
 public:
  explicit SturmSequence(const UniPoly& f);
  // Sign variations in the sequence evaluated at x.
  int variations(const Rational& x) const;
  // Distinct roots in (a, b].
  int count(const Rational& a, const Rational& b) const { return variations(a) - variations(b); }

 private:
  std::vector<UniPoly> seq_;
};

// Res_x(p(x), y - f(x)) as a polynomial in y: its roots are the values f(r)
// over the roots r of p. Computed by interpolation of Sylvester
// determinants.
UniPoly image_resultant(const UniPoly& p, const UniPoly& f);

}  // namespace realalg

#endif  // REALALG_UNIPOLY_H_
