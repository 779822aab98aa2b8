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

#include "realalg/complex_sqrt.hpp"

#include <stdexcept>

namespace realalg {

QuadExt quad_add(const QuadExt& a, const QuadExt& b) { return {a.p + b.p, a.q + b.q}; }
QuadExt quad_sub(const QuadExt& a, const QuadExt& b) { return {a.p - b.p, a.q - b.q}; }
QuadExt quad_mul(const QuadExt& a, const QuadExt& b, const Rational& n) {
  return {a.p * b.p + n * a.q * b.q, a.p * b.q + a.q * b.p};
}

namespace {

// Element alpha + beta * u of Q(s)[u] / (u^2 - (a + s)/2), with
// alpha, beta in Q(s) and s^2 = n.
struct Tower {
  QuadExt re{Rational(0), Rational(0)};
  QuadExt uco{Rational(0), Rational(0)};
};

struct TowerRing {
  Rational n;        // s^2
  QuadExt usquare;   // u^2 = (a + s)/2

  Tower add(const Tower& x, const Tower& y) const {
    return {quad_add(x.re, y.re), quad_add(x.uco, y.uco)};
  }
  Tower mul(const Tower& x, const Tower& y) const {
    QuadExt re = quad_add(quad_mul(x.re, y.re, n),
                          quad_mul(quad_mul(x.uco, y.uco, n), usquare, n));
    QuadExt uco = quad_add(quad_mul(x.re, y.uco, n), quad_mul(x.uco, y.re, n));
    return {re, uco};
  }
};

std::vector<Tower> poly_mul(const TowerRing& ring, const std::vector<Tower>& f,
                            const std::vector<Tower>& g) {
  std::vector<Tower> out(f.size() + g.size() - 1);
  for (size_t i = 0; i < f.size(); ++i)
    for (size_t j = 0; j < g.size(); ++j) out[i + j] = ring.add(out[i + j], ring.mul(f[i], g[j]));
  return out;
}

// The largest real root of p (which always has one for the resolvent
// quartics used here).
RealAlgebraic largest_real_root(const UniPoly& p) {
  auto roots = isolate_real_roots(p);
  if (roots.empty()) throw std::logic_error("complex_sqrt_cover: resolvent without real roots");
  return roots.back().first;
}

}  // namespace

ComplexSqrtCover complex_sqrt_cover(const Rational& a, const Rational& b) {
  const Rational n = a * a + b * b;

  // u is the nonnegative root of 4 X^4 - 4 a X^2 - b^2 (the largest real
  // root); v likewise with a negated.
  UniPoly pu({-b * b, Rational(0), Rational(-4) * a, Rational(0), Rational(4)});
  UniPoly pv({-b * b, Rational(0), Rational(4) * a, Rational(0), Rational(4)});
  RealAlgebraic u = largest_real_root(pu);
  RealAlgebraic v0 = largest_real_root(pv);

  ComplexSqrtCover out;
  out.u = u;
  out.v = b.sign() < 0 ? algebraic_negate(v0) : v0;

  // s = sqrt(a^2 + b^2) >= 0 and 2u as algebraic coefficients of the
  // quadratic factors f1 = Z^2 - 2u Z + s, f2 = Z^2 + 2u Z + s.
  RealAlgebraic s;
  if (n.is_zero()) {
    s = RealAlgebraic(Rational(0));
  } else {
    s = largest_real_root(UniPoly({-n, Rational(0), Rational(1)}));
  }
  RealAlgebraic two_u = algebraic_scale(u, Rational(2));
  out.f1.coeffs = {s, algebraic_negate(two_u), RealAlgebraic(Rational(1))};
  out.f2.coeffs = {s, two_u, RealAlgebraic(Rational(1))};

  // Exact identity g(Z^2) = f1 * f2 in Q(s)[u] (u only enters through the
  // odd coefficients, which must cancel).
  TowerRing ring{n, QuadExt{a / Rational(2), Rational(1, 2)}};
  const Tower zero{};
  Tower one{QuadExt::rational(1), QuadExt{Rational(0), Rational(0)}};
  Tower s_t{QuadExt{Rational(0), Rational(1)}, QuadExt{Rational(0), Rational(0)}};
  Tower minus_2u{QuadExt{Rational(0), Rational(0)}, QuadExt::rational(-2)};
  Tower plus_2u{QuadExt{Rational(0), Rational(0)}, QuadExt::rational(2)};
  std::vector<Tower> f1t = {s_t, minus_2u, one};
  std::vector<Tower> f2t = {s_t, plus_2u, one};
  std::vector<Tower> prod = poly_mul(ring, f1t, f2t);
  // g(Z^2) = Z^4 - 2a Z^2 + n.
  std::vector<Tower> gz2(5, zero);
  gz2[0].re = QuadExt::rational(n);
  gz2[2].re = QuadExt::rational(Rational(-2) * a);
  gz2[4].re = QuadExt::rational(1);
  out.identity_ok = prod.size() == gz2.size();
  if (out.identity_ok) {
    for (size_t k = 0; k < prod.size(); ++k) {
      if (!(prod[k].re == gz2[k].re) || !(prod[k].uco == QuadExt{Rational(0), Rational(0)})) {
        out.identity_ok = false;
        break;
      }
    }
  }

  // z1^2 = a + ib, checked through sign conditions that pin
  // u^2 = (a + s)/2 and v^2 = (s - a)/2 with the same nonnegative s, plus
  // the symbolic consequences u^2 - v^2 = a and (2uv)^2 = b^2.
  const RealAlgebraic zero_alg{Rational(0)};
  bool ok = algebraic_compare(u, zero_alg) >= 0 && algebraic_compare(v0, zero_alg) >= 0;
  ok = ok && algebraic_sign(pu, u) == 0 && algebraic_sign(pv, v0) == 0;
  UniPoly twoXX_minus_a({-a, Rational(0), Rational(2)});
  UniPoly twoXX_plus_a({a, Rational(0), Rational(2)});
  ok = ok && algebraic_sign(twoXX_minus_a, u) >= 0;   // 2u^2 - a = s >= 0
  ok = ok && algebraic_sign(twoXX_plus_a, v0) >= 0;   // 2v^2 + a = s >= 0
  if (ok) {
    // In Q(s): u^2 - v^2 = a and 4 u^2 v^2 = s^2 - a^2 = b^2.
    QuadExt usq{a / Rational(2), Rational(1, 2)};
    QuadExt vsq{-a / Rational(2), Rational(1, 2)};
    ok = quad_sub(usq, vsq) == QuadExt::rational(a);
    QuadExt uv2 = quad_mul(QuadExt::rational(4), quad_mul(usq, vsq, n), n);
    ok = ok && uv2 == QuadExt::rational(b * b);
  }
  // 2uv then has |2uv| = |b|, and v was negated exactly when b < 0, so the
  // imaginary part 2uv equals b.
  out.z1_squared_ok = ok;
  return out;
}

}  // namespace realalg
