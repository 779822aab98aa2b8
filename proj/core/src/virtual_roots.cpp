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

#include "realalg/virtual_roots.hpp"

#include <stdexcept>

namespace realalg {

std::string ExtendedBound::str() const {
  switch (kind) {
    case Kind::NegInf:
      return "-inf";
    case Kind::PosInf:
      return "+inf";
    case Kind::Finite:
      return value.str();
  }
  return "";
}

int extended_compare(const ExtendedBound& a, const ExtendedBound& b) {
  if (a.kind == ExtendedBound::Kind::NegInf) return b.kind == ExtendedBound::Kind::NegInf ? 0 : -1;
  if (a.kind == ExtendedBound::Kind::PosInf) return b.kind == ExtendedBound::Kind::PosInf ? 0 : 1;
  if (b.kind == ExtendedBound::Kind::NegInf) return 1;
  if (b.kind == ExtendedBound::Kind::PosInf) return -1;
  return algebraic_compare(a.value, b.value);
}

namespace {

// Minimizer of |f| on a finite algebraic interval [a, b] with
// sigma * f' > 0 on the interior; roots is the isolated root list of f.
RealAlgebraic min_abs_finite(const MonicPoly& f,
                             const std::vector<std::pair<RealAlgebraic, int>>& roots,
                             const RealAlgebraic& a, const RealAlgebraic& b, int sigma) {
  int cmp = algebraic_compare(a, b);
  if (cmp > 0) throw std::domain_error("interval_min_abs: a > b");
  if (cmp == 0) return a;
  const UniPoly& p = f.poly();
  int sa = algebraic_sign(p, a);
  int sb = algebraic_sign(p, b);
  if (sigma > 0) {
    if (sa >= 0) return a;
    if (sb <= 0) return b;
  } else {
    if (sa <= 0) return a;
    if (sb >= 0) return b;
  }
  // Strict sign change: f has its unique root of the interval inside.
  for (const auto& [root, mult] : roots) {
    (void)mult;
    if (algebraic_compare(a, root) < 0 && algebraic_compare(root, b) < 0) return root;
  }
  throw std::logic_error("interval_min_abs: no root despite a sign change (precondition broken)");
}

}  // namespace

RealAlgebraic interval_min_abs(const MonicPoly& f, const ExtendedBound& a, const ExtendedBound& b,
                               int sigma) {
  if (sigma != 1 && sigma != -1) throw std::domain_error("interval_min_abs: sigma must be +-1");
  if (extended_compare(a, b) > 0) throw std::domain_error("interval_min_abs: a > b");
  const Rational bound = cauchy_root_bound(f.poly());
  RealAlgebraic lo = a.is_finite() ? a.value : RealAlgebraic(-bound);
  RealAlgebraic hi = b.is_finite() ? b.value : RealAlgebraic(bound);
  // Truncation can only degenerate the interval if a finite endpoint
  // already lies beyond every root, where the same endpoint answers.
  if (algebraic_compare(lo, hi) > 0) return a.is_finite() ? a.value : b.value;
  auto roots = isolate_real_roots(f.poly());
  return min_abs_finite(f, roots, lo, hi, sigma);
}

VirtualRootTriangle VirtualRootTriangle::build(const MonicPoly& f) {
  const int d = f.degree();
  VirtualRootTriangle t(f);
  t.bound_ = cauchy_root_bound(f.poly());
  t.derivs_.reserve(d);
  for (int k = 0; k < d; ++k) t.derivs_.push_back(normalized_derivative(f, k));

  t.rho_.resize(d);
  // Level 1: f^[d-1] = X + c has the explicit root -c.
  {
    const UniPoly& lin = t.derivs_[d - 1].poly();
    t.rho_[0].push_back(RealAlgebraic(-lin.coeff(0)));
  }
  for (int delta = 2; delta <= d; ++delta) {
    const MonicPoly& level_poly = t.derivs_[d - delta];
    auto roots = isolate_real_roots(level_poly.poly());
    std::vector<RealAlgebraic> level;
    level.reserve(delta);
    const std::vector<RealAlgebraic>& prev = t.rho_[delta - 2];
    for (int j = 1; j <= delta; ++j) {
      RealAlgebraic lo = (j == 1) ? RealAlgebraic(-t.bound_) : prev[j - 2];
      RealAlgebraic hi = (j == delta) ? RealAlgebraic(t.bound_) : prev[j - 1];
      level.push_back(min_abs_finite(level_poly, roots, lo, hi, sigma(delta, j)));
    }
    t.rho_[delta - 1] = std::move(level);
  }
  return t;
}

const RealAlgebraic& VirtualRootTriangle::rho(int delta, int j) const {
  if (delta < 1 || delta > degree() || j < 1 || j > delta)
    throw std::out_of_range("VirtualRootTriangle::rho: bad index");
  return rho_[delta - 1][j - 1];
}

UniPoly VirtualRootTriangle::fstar() const {
  UniPoly acc = UniPoly::constant(1);
  for (const MonicPoly& p : derivs_) acc = acc * p.poly();
  return acc;
}

ExtendedBound VirtualRootTriangle::top_entry_extended(int j) const {
  const int d = degree();
  if (j <= 0) return ExtendedBound::neg_inf();
  if (j >= d + 1) return ExtendedBound::pos_inf();
  return ExtendedBound::finite(rho(d, j));
}

BudanFourierResult budan_fourier_index(const VirtualRootTriangle& t, const Rational& a) {
  const int d = t.degree();
  BudanFourierResult out;
  out.derivative_values.reserve(d + 1);
  out.derivative_values.push_back(Rational(1));  // f^[d] = 1
  for (int k = d - 1; k >= 0; --k) {
    Rational v = t.normalized_deriv(k).poly().eval(a);
    if (v.is_zero())
      throw std::domain_error("budan_fourier_index: f^[" + std::to_string(k) +
                              "](a) = 0 violates the precondition (k=" + std::to_string(k) + ")");
    out.derivative_values.push_back(v);
  }
  int r = 0, prev = 1;
  for (const Rational& v : out.derivative_values) {
    int s = v.sign();
    if (s != prev) ++r;
    prev = s;
  }
  out.r = r;
  out.bracket_lo = t.top_entry_extended(d - r);
  out.bracket_hi = t.top_entry_extended(d - r + 1);
  return out;
}

IvtWitness ivt_witness(const VirtualRootTriangle& t, const RealAlgebraic& a,
                       const RealAlgebraic& b) {
  if (algebraic_compare(a, b) >= 0) throw std::domain_error("ivt_witness: requires a < b");
  const UniPoly& f = t.poly().poly();
  int sa = algebraic_sign(f, a), sb = algebraic_sign(f, b);
  if (sa * sb >= 0) throw std::domain_error("ivt_witness: no strict sign change: f(a)f(b) >= 0");
  IvtWitness w;
  const int d = t.degree();
  w.mu.reserve(d);
  for (int j = 1; j <= d; ++j)
    w.mu.push_back(algebraic_max(a, algebraic_min(b, t.rho(d, j))));
  for (int j = 0; j < d; ++j) {
    if (algebraic_sign(f, w.mu[j]) == 0) {
      w.zero_index = j + 1;  // smallest index, for determinism
      return w;
    }
  }
  throw std::logic_error("ivt_witness: no zero among the clamped virtual roots");
}

IntervalExtrema interval_extrema(const VirtualRootTriangle& t, const RealAlgebraic& a,
                                 const RealAlgebraic& b) {
  if (algebraic_compare(a, b) >= 0) throw std::domain_error("interval_extrema: requires a < b");
  const UniPoly& f = t.poly().poly();
  const int d = t.degree();

  RealAlgebraic fa = eval_algebraic(f, a), fb = eval_algebraic(f, b);
  IntervalExtrema out;
  out.inf = algebraic_min(fa, fb);
  out.sup = algebraic_max(fa, fb);
  for (int j = 1; j <= d - 1; ++j) {
    RealAlgebraic nu = algebraic_max(a, algebraic_min(b, t.rho(d - 1, j)));
    RealAlgebraic fnu = eval_algebraic(f, nu);
    out.inf = algebraic_min(out.inf, fnu);
    out.sup = algebraic_max(out.sup, fnu);
  }
  out.inf_abs = algebraic_min(algebraic_abs(fa), algebraic_abs(fb));
  for (int j = 1; j <= d; ++j) {
    RealAlgebraic mu = algebraic_max(a, algebraic_min(b, t.rho(d, j)));
    out.inf_abs = algebraic_min(out.inf_abs, algebraic_abs(eval_algebraic(f, mu)));
  }
  const RealAlgebraic zero{Rational(0)};
  if (algebraic_compare(out.inf, zero) > 0)
    out.constant_sign = 1;
  else if (algebraic_compare(out.sup, zero) < 0)
    out.constant_sign = -1;
  else
    out.constant_sign = 0;
  return out;
}

VirtualRootTriangle rescale_roots(const VirtualRootTriangle& t, const Rational& c) {
  const int d = t.degree();
  const UniPoly& fp = t.poly().poly();
  std::vector<Rational> gc(d + 1, Rational(0));
  gc[d] = 1;
  for (int k = 0; k < d; ++k) gc[k] = rational_pow(c, d - k) * fp.coeff(k);
  VirtualRootTriangle fresh = VirtualRootTriangle::build(MonicPoly(UniPoly(std::move(gc))));

  // Transform rule, checked exactly on the whole triangle: each level
  // rescales the same way as the top row.
  for (int delta = 1; delta <= d; ++delta) {
    for (int j = 1; j <= delta; ++j) {
      const RealAlgebraic& source =
          c.sign() >= 0 ? t.rho(delta, j) : t.rho(delta, delta + 1 - j);
      RealAlgebraic expected = algebraic_scale(source, c);
      if (algebraic_compare(expected, fresh.rho(delta, j)) != 0)
        throw std::logic_error("rescale_roots: transformed triangle disagrees with recomputation");
    }
  }
  return fresh;
}

}  // namespace realalg
