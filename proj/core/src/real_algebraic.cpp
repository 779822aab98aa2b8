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

#include "realalg/real_algebraic.hpp"

#include <optional>
#include <stdexcept>

namespace realalg {

namespace {

// Divisors of |n| by trial division, capped so pathological inputs do not
// stall the rational-root collapse (which is best effort).
std::optional<std::vector<Int>> bounded_divisors(Int n) {
  if (n < 0) n = -n;
  if (n.is_zero()) return std::nullopt;
  std::vector<Int> divs;
  const int kMaxSteps = 100000;
  Int d = 1;
  for (int steps = 0; d * d <= n; ++d, ++steps) {
    if (steps > kMaxSteps) return std::nullopt;
    if (n % d == 0) {
      divs.push_back(d);
      Int q = n / d;
      if (q != d) divs.push_back(q);
    }
  }
  return divs;
}

// The rational root of p inside (lo, hi), if any. p is squarefree with at
// most one root in the interval.
std::optional<Rational> rational_root_in(const UniPoly& p, const Rational& lo, const Rational& hi) {
  if (p.degree() == 1) {
    Rational r = -p.coeff(0) / p.coeff(1);
    if (lo < r && r < hi) return r;
    return std::nullopt;
  }
  // Scale to a primitive integer polynomial.
  Int denlcm = 1;
  for (const Rational& c : p.coeffs()) denlcm = boost::multiprecision::lcm(denlcm, c.den());
  std::vector<Int> ic(p.coeffs().size());
  for (size_t k = 0; k < ic.size(); ++k) {
    Rational scaled = p.coeff(k) * Rational(denlcm);
    ic[k] = scaled.num();
  }
  Int content = 0;
  for (const Int& c : ic) content = boost::multiprecision::gcd(content, c);
  if (content > 1)
    for (Int& c : ic) c /= content;

  size_t low = 0;
  while (low < ic.size() && ic[low].is_zero()) ++low;
  if (low > 0) {
    // 0 is the (single, p being squarefree) rational root at the origin.
    if (lo.sign() < 0 && hi.sign() > 0) return Rational(0);
    ic.erase(ic.begin(), ic.begin() + low);
  }
  auto num_divs = bounded_divisors(ic.front());
  auto den_divs = bounded_divisors(ic.back());
  if (!num_divs || !den_divs) return std::nullopt;
  for (const Int& u : *num_divs) {
    for (const Int& v : *den_divs) {
      for (int s : {1, -1}) {
        Rational r(s * u, v);
        if (lo < r && r < hi && p.eval(r).is_zero()) return r;
      }
    }
  }
  return std::nullopt;
}

}  // namespace

const Rational& RealAlgebraic::rational_value() const {
  if (!is_rational_) throw std::logic_error("RealAlgebraic: not an exact rational");
  return rational_;
}

const UniPoly& RealAlgebraic::defpoly() const {
  if (is_rational_) throw std::logic_error("RealAlgebraic: rational form has no defining polynomial");
  return defpoly_;
}

const Rational& RealAlgebraic::lower() const {
  if (is_rational_) throw std::logic_error("RealAlgebraic: rational form has no interval");
  return lo_;
}

const Rational& RealAlgebraic::upper() const {
  if (is_rational_) throw std::logic_error("RealAlgebraic: rational form has no interval");
  return hi_;
}

RealAlgebraic RealAlgebraic::from_root(const UniPoly& defpoly, const Rational& lo,
                                       const Rational& hi) {
  if (defpoly.degree() < 1) throw std::domain_error("RealAlgebraic::from_root: constant polynomial");
  if (!(lo < hi)) throw std::domain_error("RealAlgebraic::from_root: empty interval");
  UniPoly p = defpoly.monic();
  if (poly_gcd(p, p.derivative()).degree() != 0)
    throw std::domain_error("RealAlgebraic::from_root: polynomial is not squarefree");
  if (p.eval(lo).is_zero() || p.eval(hi).is_zero())
    throw std::domain_error("RealAlgebraic::from_root: interval endpoint is a root");
  if (sturm_count(p, lo, hi) != 1)
    throw std::domain_error("RealAlgebraic::from_root: interval does not isolate one root");
  if (auto r = rational_root_in(p, lo, hi)) return RealAlgebraic(*r);
  RealAlgebraic a;
  a.is_rational_ = false;
  a.defpoly_ = std::move(p);
  a.lo_ = lo;
  a.hi_ = hi;
  return a;
}

void RealAlgebraic::refine() {
  if (is_rational_) return;
  Rational mid = (lo_ + hi_) / Rational(2);
  int sm = defpoly_.eval(mid).sign();
  if (sm == 0) {
    is_rational_ = true;
    rational_ = mid;
    defpoly_ = UniPoly();
    return;
  }
  if (defpoly_.eval(lo_).sign() * sm < 0)
    hi_ = mid;
  else
    lo_ = mid;
}

void RealAlgebraic::refine_below(const Rational& width) {
  while (!is_rational_ && hi_ - lo_ >= width) refine();
}

double RealAlgebraic::to_double() const {
  if (is_rational_) return rational_.to_double();
  RealAlgebraic copy = *this;
  copy.refine_below(Rational(Int(1), Int(1) << 48));
  if (copy.is_rational_) return copy.rational_.to_double();
  return ((copy.lo_ + copy.hi_) / Rational(2)).to_double();
}

std::string RealAlgebraic::str() const {
  if (is_rational_) return rational_.str();
  return "root(" + defpoly_.str() + " in (" + lo_.str() + ", " + hi_.str() + "))";
}

int algebraic_sign(const UniPoly& g, const RealAlgebraic& a) {
  if (g.is_zero()) return 0;
  if (a.is_rational()) return g.eval(a.rational_value()).sign();
  UniPoly h = poly_gcd(a.defpoly_, g);
  if (h.degree() >= 1 && h.eval(a.lo_).sign() * h.eval(a.hi_).sign() < 0) return 0;
  // Not a root of g: refine until no root of g meets the interval.
  SturmSequence sturm(g);
  RealAlgebraic x = a;
  for (;;) {
    if (x.is_rational()) return g.eval(x.rational_value()).sign();
    if (sturm.count(x.lo_, x.hi_) == 0) {
      Rational mid = (x.lo_ + x.hi_) / Rational(2);
      return g.eval(mid).sign();
    }
    x.refine();
  }
}

namespace {

// compare of an isolated value against a rational.
int compare_isolated_rational(const RealAlgebraic& a, const Rational& q) {
  RealAlgebraic x = a;
  for (;;) {
    if (x.is_rational()) {
      const Rational& r = x.rational_value();
      return r < q ? -1 : (r == q ? 0 : 1);
    }
    if (q <= x.lower()) return 1;
    if (q >= x.upper()) return -1;
    if (x.defpoly().eval(q).is_zero()) return 0;
    x.refine();
  }
}

}  // namespace

int algebraic_compare(const RealAlgebraic& a, const RealAlgebraic& b) {
  if (a.is_rational() && b.is_rational()) {
    const Rational &x = a.rational_value(), &y = b.rational_value();
    return x < y ? -1 : (x == y ? 0 : 1);
  }
  if (b.is_rational()) return compare_isolated_rational(a, b.rational_value());
  if (a.is_rational()) return -compare_isolated_rational(b, a.rational_value());

  UniPoly h = poly_gcd(a.defpoly_, b.defpoly_);
  Rational lo = max(a.lo_, b.lo_), hi = min(a.hi_, b.hi_);
  if (lo < hi && h.degree() >= 1 && h.eval(lo).sign() * h.eval(hi).sign() < 0) return 0;

  RealAlgebraic x = a, y = b;
  for (;;) {
    if (x.is_rational() || y.is_rational()) return algebraic_compare(x, y);
    if (x.hi_ <= y.lo_) return -1;
    if (y.hi_ <= x.lo_) return 1;
    x.refine();
    y.refine();
  }
}

RealAlgebraic algebraic_negate(const RealAlgebraic& a) {
  if (a.is_rational()) return RealAlgebraic(-a.rational_value());
  RealAlgebraic r = a;
  UniPoly refl = a.defpoly().reflect().monic();
  Rational lo = -a.upper(), hi = -a.lower();
  // Structure is preserved exactly; no rational collapse can newly apply.
  return RealAlgebraic::from_root(refl, lo, hi);
}

RealAlgebraic algebraic_scale(const RealAlgebraic& a, const Rational& c) {
  if (c.is_zero()) return RealAlgebraic(Rational(0));
  if (a.is_rational()) return RealAlgebraic(a.rational_value() * c);
  UniPoly scaled = a.defpoly().compose_scale(c);
  Rational lo = a.lower() * c, hi = a.upper() * c;
  if (c.sign() < 0) std::swap(lo, hi);
  return RealAlgebraic::from_root(scaled, lo, hi);
}

RealAlgebraic algebraic_abs(const RealAlgebraic& a) {
  return algebraic_compare(a, RealAlgebraic(Rational(0))) < 0 ? algebraic_negate(a) : a;
}

RealAlgebraic algebraic_min(const RealAlgebraic& a, const RealAlgebraic& b) {
  return algebraic_compare(a, b) <= 0 ? a : b;
}

RealAlgebraic algebraic_max(const RealAlgebraic& a, const RealAlgebraic& b) {
  return algebraic_compare(a, b) >= 0 ? a : b;
}

namespace {

struct Isolator {
  const UniPoly& g;
  const SturmSequence& sturm;
  std::vector<RealAlgebraic> out;

  void solve(const Rational& lo, const Rational& hi, int vlo, int vhi) {
    int count = vlo - vhi;
    if (count <= 0) return;
    if (count == 1) {
      out.push_back(RealAlgebraic::from_root(g, lo, hi));
      return;
    }
    Rational mid = (lo + hi) / Rational(2);
    if (!g.eval(mid).is_zero()) {
      int vmid = sturm.variations(mid);
      solve(lo, mid, vlo, vmid);
      solve(mid, hi, vmid, vhi);
      return;
    }
    // mid itself is a (rational) root; carve out a neighborhood holding
    // only this root, then recurse on both sides.
    Rational w = (hi - lo) / Rational(4);
    for (;;) {
      if (!g.eval(mid - w).is_zero() && !g.eval(mid + w).is_zero() &&
          sturm.count(mid - w, mid + w) == 1)
        break;
      w /= Rational(2);
    }
    solve(lo, mid - w, vlo, sturm.variations(mid - w));
    out.push_back(RealAlgebraic(mid));
    solve(mid + w, hi, sturm.variations(mid + w), vhi);
  }
};

}  // namespace

std::vector<std::pair<RealAlgebraic, int>> isolate_real_roots(const UniPoly& f) {
  if (f.is_zero()) throw std::domain_error("isolate_real_roots: zero polynomial");
  std::vector<std::pair<RealAlgebraic, int>> result;
  if (f.degree() == 0) return result;
  UniPoly g = squarefree_part(f);
  Rational b = cauchy_root_bound(g);
  SturmSequence sturm(g);
  Isolator iso{g, sturm, {}};
  iso.solve(-b, b, sturm.variations(-b), sturm.variations(b));

  for (RealAlgebraic& root : iso.out) {
    int mult = 1;
    UniPoly d = f.derivative();
    while (!d.is_zero() && algebraic_sign(d, root) == 0) {
      ++mult;
      d = d.derivative();
    }
    result.emplace_back(std::move(root), mult);
  }
  return result;
}

namespace {

// Crude interval bound for f over [lo, hi].
std::pair<Rational, Rational> interval_eval(const UniPoly& f, const Rational& lo,
                                            const Rational& hi) {
  Rational acc_lo = 0, acc_hi = 0;
  for (int k = 0; k <= f.degree(); ++k) {
    const Rational c = f.coeff(k);
    if (c.is_zero()) continue;
    Rational plo = rational_pow(lo, k), phi = rational_pow(hi, k);
    Rational mn = min(plo, phi), mx = max(plo, phi);
    if (k % 2 == 0 && lo.sign() < 0 && hi.sign() > 0) mn = min(mn, Rational(0));
    Rational t1 = c * mn, t2 = c * mx;
    acc_lo += min(t1, t2);
    acc_hi += max(t1, t2);
  }
  return {acc_lo, acc_hi};
}

}  // namespace

RealAlgebraic eval_algebraic(const UniPoly& f, const RealAlgebraic& a) {
  if (a.is_rational()) return RealAlgebraic(f.eval(a.rational_value()));
  if (f.is_constant()) return RealAlgebraic(f.coeff(0));
  UniPoly res = image_resultant(a.defpoly(), f);
  UniPoly rsf = squarefree_part(res);
  SturmSequence sturm(rsf);
  RealAlgebraic x = a;
  for (int round = 0;; ++round) {
    if (x.is_rational()) return RealAlgebraic(f.eval(x.rational_value()));
    auto [jlo, jhi] = interval_eval(f, x.lower(), x.upper());
    Rational pad = 1;
    for (int t = 0; t < round + 2; ++t, pad /= Rational(2)) {
      Rational lo = jlo - pad, hi = jhi + pad;
      if (!rsf.eval(lo).is_zero() && !rsf.eval(hi).is_zero() && sturm.count(lo, hi) == 1)
        return RealAlgebraic::from_root(rsf, lo, hi);
    }
    x.refine();
  }
}

}  // namespace realalg
