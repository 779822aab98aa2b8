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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "realalg/complex_sqrt.hpp"
#include "realalg/sign_table.hpp"
#include "realalg/virtual_roots.hpp"
#include "test_util.hpp"

using namespace realalg;
using namespace realalg::testutil;

namespace {

RealAlgebraic rat(int n) { return RealAlgebraic(Rational(n)); }

ExtendedBound fin(int n) { return ExtendedBound::finite(rat(n)); }

bool rho_equals(const VirtualRootTriangle& t, int delta, int j, const RealAlgebraic& v) {
  return algebraic_compare(t.rho(delta, j), v) == 0;
}

// Interlacing of two consecutive levels plus monotonicity of each level.
void check_interlacing(const VirtualRootTriangle& t) {
  for (int delta = 2; delta <= t.degree(); ++delta) {
    for (int j = 1; j < delta; ++j) {
      CHECK(algebraic_compare(t.rho(delta, j), t.rho(delta - 1, j)) <= 0);
      CHECK(algebraic_compare(t.rho(delta - 1, j), t.rho(delta, j + 1)) <= 0);
    }
  }
}

}  // namespace

TEST_CASE("interval_min_abs: spec examples") {
  MonicPoly x(UniPoly::parse("x"));
  CHECK(algebraic_compare(interval_min_abs(x, fin(-1), fin(1), 1), rat(0)) == 0);
  CHECK(algebraic_compare(interval_min_abs(x, fin(1), fin(2), 1), rat(1)) == 0);
  CHECK(algebraic_compare(interval_min_abs(x, fin(2), fin(2), 1), rat(2)) == 0);
  CHECK_THROWS_AS(interval_min_abs(x, fin(2), fin(1), 1), std::domain_error);

  MonicPoly f(UniPoly::parse("x^2 - 2"));
  RealAlgebraic m = interval_min_abs(f, fin(0), ExtendedBound::pos_inf(), 1);
  CHECK(algebraic_sign(UniPoly::parse("x^2 - 2"), m) == 0);
  CHECK(algebraic_compare(m, rat(0)) > 0);
}

TEST_CASE("interval_min_abs satisfies the defining inequality system") {
  // (x-a)(x-b) f(x) = 0 plus the five sign conditions, on random triangle
  // recursion sites.
  std::mt19937 rng(23);
  for (int trial = 0; trial < 20; ++trial) {
    MonicPoly f = random_monic(rng, 4, 5);
    VirtualRootTriangle t = virtual_roots(f);
    for (int delta = 2; delta <= 4; ++delta) {
      const MonicPoly& g = t.normalized_deriv(4 - delta);
      for (int j = 1; j <= delta; ++j) {
        int sigma = VirtualRootTriangle::sigma(delta, j);
        const RealAlgebraic& x = t.rho(delta, j);
        int fx = algebraic_sign(g.poly(), x);
        if (j > 1) {
          const RealAlgebraic& a = t.rho(delta - 1, j - 1);
          int xa = algebraic_compare(x, a);
          CHECK(xa >= 0);
          int fa = algebraic_sign(g.poly(), a);
          CHECK(sigma * xa * fx <= 0);
          CHECK(sigma * xa * fa <= 0);
        }
        if (j < delta) {
          const RealAlgebraic& b = t.rho(delta - 1, j);
          int bx = algebraic_compare(b, x);
          CHECK(bx >= 0);
          int fb = algebraic_sign(g.poly(), b);
          CHECK(sigma * bx * fx >= 0);
          CHECK(sigma * bx * fb >= 0);
        }
        // (x - a)(x - b) f(x) = 0 with the infinite-end conventions.
        bool interior_zero = fx == 0;
        bool at_left = j > 1 && algebraic_compare(x, t.rho(delta - 1, j - 1)) == 0;
        bool at_right = j < delta && algebraic_compare(x, t.rho(delta - 1, j)) == 0;
        CHECK((interior_zero || at_left || at_right));
      }
    }
  }
}

TEST_CASE("virtual roots: spec examples") {
  VirtualRootTriangle t1 = virtual_roots(MonicPoly(UniPoly::parse("x^2 - 1")));
  CHECK(rho_equals(t1, 1, 1, rat(0)));
  CHECK(rho_equals(t1, 2, 1, rat(-1)));
  CHECK(rho_equals(t1, 2, 2, rat(1)));

  VirtualRootTriangle t2 = virtual_roots(MonicPoly(UniPoly::parse("x^2 + 1")));
  CHECK(rho_equals(t2, 2, 1, rat(0)));
  CHECK(rho_equals(t2, 2, 2, rat(0)));

  VirtualRootTriangle t3 = virtual_roots(MonicPoly(UniPoly::parse("x^3 - 6*x^2 + 11*x - 6")));
  CHECK(rho_equals(t3, 3, 1, rat(1)));
  CHECK(rho_equals(t3, 3, 2, rat(2)));
  CHECK(rho_equals(t3, 3, 3, rat(3)));

  VirtualRootTriangle t4 = virtual_roots(MonicPoly(UniPoly::parse("x - 7")));
  CHECK(rho_equals(t4, 1, 1, rat(7)));

  CHECK_THROWS_AS(MonicPoly(UniPoly::parse("2*x - 1")), std::domain_error);
}

TEST_CASE("virtual roots: interlacing, coverage and fstar membership") {
  std::mt19937 rng(29);
  for (int trial = 0; trial < 25; ++trial) {
    std::uniform_int_distribution<int> deg(1, 5);
    MonicPoly f = random_monic(rng, deg(rng), 6);
    VirtualRootTriangle t = virtual_roots(f);
    check_interlacing(t);

    // Every real root of f is a top-row entry.
    for (auto& [root, mult] : isolate_real_roots(f.poly())) {
      bool found = false;
      for (int j = 1; j <= t.degree() && !found; ++j)
        found = algebraic_compare(root, t.rho(t.degree(), j)) == 0;
      CHECK(found);
    }

    // Every triangle entry annihilates f*.
    UniPoly fstar = t.fstar();
    for (int delta = 1; delta <= t.degree(); ++delta)
      for (int j = 1; j <= delta; ++j) CHECK(algebraic_sign(fstar, t.rho(delta, j)) == 0);

    // And is bounded by the Cauchy bound.
    for (int delta = 1; delta <= t.degree(); ++delta) {
      for (int j = 1; j <= delta; ++j) {
        CHECK(algebraic_compare(t.rho(delta, j), RealAlgebraic(t.bound())) <= 0);
        CHECK(algebraic_compare(t.rho(delta, j), RealAlgebraic(-t.bound())) >= 0);
      }
    }
  }
}

TEST_CASE("virtual roots: exploratory converse of the fstar membership") {
  // Whether every real root of f* shows up somewhere in the triangle is
  // deliberately not asserted; report violations as warnings only.
  std::mt19937 rng(31);
  for (int trial = 0; trial < 5; ++trial) {
    MonicPoly f = random_monic(rng, 4, 4);
    VirtualRootTriangle t = virtual_roots(f);
    for (auto& [root, mult] : isolate_real_roots(t.fstar())) {
      bool found = false;
      for (int delta = 1; delta <= t.degree() && !found; ++delta)
        for (int j = 1; j <= delta && !found; ++j)
          found = algebraic_compare(root, t.rho(delta, j)) == 0;
      WARN_MESSAGE(found, "root of f* outside the triangle (exploratory check)");
    }
  }
}

TEST_CASE("budan-fourier: spec examples") {
  VirtualRootTriangle t = virtual_roots(MonicPoly(UniPoly::parse("x^2 - 4")));
  BudanFourierResult r1 = budan_fourier_index(t, Rational(1));
  CHECK(r1.r == 1);
  CHECK(r1.derivative_values == std::vector<Rational>{Rational(1), Rational(1), Rational(-3)});
  REQUIRE(r1.bracket_lo.is_finite());
  REQUIRE(r1.bracket_hi.is_finite());
  CHECK(algebraic_compare(r1.bracket_lo.value, rat(-2)) == 0);
  CHECK(algebraic_compare(r1.bracket_hi.value, rat(2)) == 0);

  BudanFourierResult r2 = budan_fourier_index(t, Rational(3));
  CHECK(r2.r == 0);
  CHECK(algebraic_compare(r2.bracket_lo.value, rat(2)) == 0);
  CHECK(r2.bracket_hi.kind == ExtendedBound::Kind::PosInf);

  CHECK_THROWS_WITH_AS(budan_fourier_index(t, Rational(0)),
                       doctest::Contains("k=1"), std::domain_error);
}

TEST_CASE("budan-fourier: bracket and parity against the Sturm oracle") {
  std::mt19937 rng(37);
  int done = 0;
  while (done < 60) {
    std::uniform_int_distribution<int> deg(1, 5);
    MonicPoly f = random_monic(rng, deg(rng), 6);
    Rational a = random_rational(rng, 8);
    VirtualRootTriangle t = virtual_roots(f);
    BudanFourierResult r;
    try {
      r = budan_fourier_index(t, a);
    } catch (const std::domain_error&) {
      continue;  // a derivative vanished at a; resample
    }
    ++done;
    RealAlgebraic av{a};
    if (r.bracket_lo.is_finite()) CHECK(algebraic_compare(r.bracket_lo.value, av) < 0);
    if (r.bracket_hi.is_finite()) CHECK(algebraic_compare(av, r.bracket_hi.value) < 0);

    // Budan-Fourier: the number of roots of f in (a, +inf) counted with
    // multiplicity is at most r and of the same parity.
    int mult_above = 0;
    for (auto& [root, mult] : isolate_real_roots(f.poly()))
      if (algebraic_compare(root, av) > 0) mult_above += mult;
    CHECK(mult_above <= r.r);
    CHECK((r.r - mult_above) % 2 == 0);
  }
}

TEST_CASE("ivt witness: spec examples") {
  VirtualRootTriangle t = virtual_roots(MonicPoly(UniPoly::parse("x^3 - x")));
  IvtWitness w = ivt_witness(t, rat(-2), rat(2));
  REQUIRE(w.mu.size() == 3);
  CHECK(algebraic_compare(w.mu[0], rat(-1)) == 0);
  CHECK(algebraic_compare(w.mu[1], rat(0)) == 0);
  CHECK(algebraic_compare(w.mu[2], rat(1)) == 0);
  CHECK(w.zero_index == 1);  // smallest index among the three zeros

  VirtualRootTriangle tx = virtual_roots(MonicPoly(UniPoly::parse("x")));
  IvtWitness wx = ivt_witness(tx, rat(-1), rat(1));
  CHECK(wx.zero_index == 1);
  CHECK(algebraic_compare(wx.mu[0], rat(0)) == 0);

  VirtualRootTriangle t4 = virtual_roots(MonicPoly(UniPoly::parse("x^2 - 4")));
  CHECK_THROWS_WITH_AS(ivt_witness(t4, rat(0), rat(1)), doctest::Contains("sign change"),
                       std::domain_error);
  CHECK_THROWS_AS(ivt_witness(t4, rat(1), rat(0)), std::domain_error);
}

TEST_CASE("interval extrema: spec examples") {
  VirtualRootTriangle t = virtual_roots(MonicPoly(UniPoly::parse("x^2")));
  IntervalExtrema e1 = interval_extrema(t, rat(-1), rat(2));
  CHECK(algebraic_compare(e1.inf, rat(0)) == 0);
  CHECK(algebraic_compare(e1.sup, rat(4)) == 0);
  CHECK(algebraic_compare(e1.inf_abs, rat(0)) == 0);
  CHECK(e1.constant_sign == 0);

  IntervalExtrema e2 = interval_extrema(t, rat(1), rat(2));
  CHECK(algebraic_compare(e2.inf, rat(1)) == 0);
  CHECK(algebraic_compare(e2.sup, rat(4)) == 0);
  CHECK(algebraic_compare(e2.inf_abs, rat(1)) == 0);
  CHECK(e2.constant_sign == 1);

  VirtualRootTriangle tl = virtual_roots(MonicPoly(UniPoly::parse("x - 5")));
  IntervalExtrema e3 = interval_extrema(tl, rat(-1), rat(1));
  CHECK(algebraic_compare(e3.inf, rat(-6)) == 0);
  CHECK(algebraic_compare(e3.sup, rat(-4)) == 0);
  CHECK(algebraic_compare(e3.inf_abs, rat(4)) == 0);
  CHECK(e3.constant_sign == -1);

  CHECK_THROWS_AS(interval_extrema(t, rat(1), rat(1)), std::domain_error);
}

TEST_CASE("interval extrema agree with a double-precision grid oracle") {
  std::mt19937 rng(41);
  for (int trial = 0; trial < 10; ++trial) {
    std::uniform_int_distribution<int> deg(1, 4);
    MonicPoly f = random_monic(rng, deg(rng), 3);
    Rational a = random_rational(rng, 2);
    Rational b = a + Rational(1) + random_rational(rng, 2).abs();
    VirtualRootTriangle t = virtual_roots(f);
    IntervalExtrema e = interval_extrema(t, RealAlgebraic(a), RealAlgebraic(b));

    const double lo = a.to_double(), hi = b.to_double();
    double lipschitz = 0;
    double m = std::max(std::abs(lo), std::abs(hi));
    for (int k = 1; k <= f.degree(); ++k)
      lipschitz += k * std::abs(f.poly().coeff(k).to_double()) * std::pow(m, k - 1);
    const int steps = 200000;
    const double h = (hi - lo) / steps;
    REQUIRE(lipschitz * h < 1e-2);
    double gmin = 1e300, gmax = -1e300, gabs = 1e300;
    for (int i = 0; i <= steps; ++i) {
      double v = f.poly().eval_double(lo + i * h);
      gmin = std::min(gmin, v);
      gmax = std::max(gmax, v);
      gabs = std::min(gabs, std::abs(v));
    }
    const double tol = lipschitz * h + 1e-9;
    CHECK(std::abs(e.inf.to_double() - gmin) <= tol);
    CHECK(std::abs(e.sup.to_double() - gmax) <= tol);
    CHECK(std::abs(e.inf_abs.to_double() - gabs) <= tol);
  }
}

TEST_CASE("rescale: spec examples and random exactness") {
  VirtualRootTriangle t = virtual_roots(MonicPoly(UniPoly::parse("x^2 - 1")));
  VirtualRootTriangle g3 = rescale_roots(t, Rational(3));
  CHECK(g3.poly().poly() == UniPoly::parse("x^2 - 9"));
  CHECK(rho_equals(g3, 2, 1, rat(-3)));
  CHECK(rho_equals(g3, 2, 2, rat(3)));

  VirtualRootTriangle gm3 = rescale_roots(t, Rational(-3));
  CHECK(rho_equals(gm3, 2, 1, rat(-3)));
  CHECK(rho_equals(gm3, 2, 2, rat(3)));

  VirtualRootTriangle g0 = rescale_roots(t, Rational(0));
  CHECK(g0.poly().poly() == UniPoly::parse("x^2"));
  CHECK(rho_equals(g0, 2, 1, rat(0)));
  CHECK(rho_equals(g0, 2, 2, rat(0)));

  std::mt19937 rng(43);
  for (int trial = 0; trial < 8; ++trial) {
    MonicPoly f = random_monic(rng, 4, 4);
    VirtualRootTriangle tf = virtual_roots(f);
    rescale_roots(tf, random_rational(rng, 4));  // throws on any mismatch
  }
}

TEST_CASE("sign table: spec examples") {
  SignTable s1 = sign_table(virtual_roots(MonicPoly(UniPoly::parse("x^2 - 4"))));
  REQUIRE(s1.boundaries.size() == 2);
  REQUIRE(s1.regions.size() == 5);
  CHECK(s1.regions[0].sign == 1);
  CHECK(s1.regions[1].sign == 0);
  CHECK(s1.regions[2].sign == -1);
  CHECK(s1.regions[3].sign == 0);
  CHECK(s1.regions[4].sign == 1);

  SignTable s2 = sign_table(virtual_roots(MonicPoly(UniPoly::parse("x^2 + 1"))));
  REQUIRE(s2.boundaries.size() == 1);
  REQUIRE(s2.regions.size() == 3);
  CHECK(s2.regions[0].sign == 1);
  CHECK(s2.regions[1].sign == 1);  // f(0) = 1 at the coincident point
  CHECK(s2.regions[2].sign == 1);

  SignTable s3 = sign_table(virtual_roots(MonicPoly(UniPoly::parse("x^2"))));
  REQUIRE(s3.boundaries.size() == 1);
  CHECK(s3.regions[0].sign == 1);
  CHECK(s3.regions[1].sign == 0);
  CHECK(s3.regions[2].sign == 1);
}

TEST_CASE("sign table gaps match dense rational sampling") {
  std::mt19937 rng(47);
  for (int trial = 0; trial < 12; ++trial) {
    std::uniform_int_distribution<int> deg(1, 5);
    MonicPoly f = random_monic(rng, deg(rng), 5);
    SignTable table = sign_table(virtual_roots(f));
    for (const auto& region : table.regions) {
      CHECK(region.resolution == SignTable::Resolution::Exact);
      if (region.kind == SignTable::Region::Kind::Point) {
        CHECK(algebraic_sign(f.poly(), region.at) == region.sign);
        continue;
      }
      // Sample a few rationals inside the open gap.
      RealAlgebraic lo_v, hi_v;
      Rational lo_q, hi_q;
      if (region.lo.is_finite()) {
        RealAlgebraic v = region.lo.value;
        v.refine_below(Rational(1, 1024));
        lo_q = v.is_rational() ? v.rational_value() : v.upper();
      } else {
        lo_q = -cauchy_root_bound(f.poly()) - 1;
      }
      if (region.hi.is_finite()) {
        RealAlgebraic v = region.hi.value;
        v.refine_below(Rational(1, 1024));
        hi_q = v.is_rational() ? v.rational_value() : v.lower();
      } else {
        hi_q = cauchy_root_bound(f.poly()) + 1;
      }
      if (!(lo_q < hi_q)) continue;  // gap narrower than the refinement
      for (int i = 1; i <= 7; ++i) {
        Rational x = lo_q + (hi_q - lo_q) * Rational(i, 8);
        bool inside = true;
        if (region.lo.is_finite())
          inside = inside && algebraic_compare(RealAlgebraic(x), region.lo.value) > 0;
        if (region.hi.is_finite())
          inside = inside && algebraic_compare(RealAlgebraic(x), region.hi.value) < 0;
        if (inside) CHECK(f.poly().eval(x).sign() == region.sign);
      }
    }
  }
}

TEST_CASE("degree-4 inequality system on random quartics") {
  // The direct-rule inequality system characterizing rho_{1,1}, rho_{2,1},
  // rho_{2,2}, rho_{3,2}, rho_{3,3} and rho_{4,3} for monic quartics,
  // instantiated with the known monotonicity signs.
  std::mt19937 rng(53);
  for (int trial = 0; trial < 25; ++trial) {
    MonicPoly f = random_monic(rng, 4, 6);
    VirtualRootTriangle t = virtual_roots(f);
    const UniPoly& f0 = f.poly();
    const UniPoly f1 = t.normalized_deriv(1).poly();
    const UniPoly f2 = t.normalized_deriv(2).poly();
    const UniPoly f3 = t.normalized_deriv(3).poly();

    const RealAlgebraic &r11 = t.rho(1, 1), &r21 = t.rho(2, 1), &r22 = t.rho(2, 2);
    const RealAlgebraic &r32 = t.rho(3, 2), &r33 = t.rho(3, 3), &r43 = t.rho(4, 3);

    // vr_{1,1}: rho_{1,1} = a3 / 4 (the root of f^[3]).
    CHECK(algebraic_sign(f3, r11) == 0);

    auto cmp = [](const RealAlgebraic& a, const RealAlgebraic& b) {
      return algebraic_compare(a, b);
    };

    // vr_{2,1,*}: left interval of f^[2], decreasing.
    CHECK(cmp(r21, r11) <= 0);
    CHECK(cmp(r21, r11) * algebraic_sign(f2, r11) >= 0);
    CHECK(cmp(r21, r11) * algebraic_sign(f2, r21) >= 0);
    CHECK(algebraic_sign(f2, r21) >= 0);

    // vr_{2,2,*}: right interval of f^[2], increasing.
    CHECK(cmp(r11, r22) <= 0);
    CHECK(cmp(r22, r11) * algebraic_sign(f2, r11) <= 0);
    CHECK(cmp(r22, r11) * algebraic_sign(f2, r22) <= 0);
    CHECK(algebraic_sign(f2, r22) >= 0);

    // vr_{3,3,*}: rightmost interval of f^[1], increasing.
    CHECK(cmp(r22, r33) <= 0);
    CHECK(cmp(r33, r22) * algebraic_sign(f1, r22) <= 0);
    CHECK(cmp(r33, r22) * algebraic_sign(f1, r33) <= 0);
    CHECK(algebraic_sign(f1, r33) >= 0);

    // vr_{3,2,*}: middle interval of f^[1], decreasing.
    CHECK(cmp(r21, r32) <= 0);
    CHECK(cmp(r32, r22) <= 0);
    CHECK(cmp(r32, r21) * algebraic_sign(f1, r21) >= 0);
    CHECK(cmp(r32, r22) * algebraic_sign(f1, r22) >= 0);
    CHECK(cmp(r32, r21) * algebraic_sign(f1, r32) >= 0);
    CHECK(cmp(r32, r22) * algebraic_sign(f1, r32) >= 0);

    // vr_{4,3,*}: the (3,2)-(3,3) interval of f, decreasing.
    CHECK(cmp(r32, r43) <= 0);
    CHECK(cmp(r43, r33) <= 0);
    CHECK(cmp(r43, r32) * algebraic_sign(f0, r32) >= 0);
    CHECK(cmp(r43, r33) * algebraic_sign(f0, r33) >= 0);
    CHECK(cmp(r43, r32) * algebraic_sign(f0, r43) >= 0);
    CHECK(cmp(r43, r33) * algebraic_sign(f0, r43) >= 0);
  }
}

TEST_CASE("perturbation decay of the top row") {
  std::mt19937 rng(59);
  const Rational refine_width(Int(1), Int(100000000));
  for (int trial = 0; trial < 3; ++trial) {
    MonicPoly f = random_monic(rng, 3, 3);
    UniPoly g = random_poly(rng, 2, 3);
    VirtualRootTriangle base = virtual_roots(f);

    double prev = 1e300;
    double at_minus6 = 0;
    Rational t(1, 10);
    for (int e = 1; e <= 6; ++e, t /= Rational(10)) {
      UniPoly fp = f.poly() + t * g;
      VirtualRootTriangle pert = virtual_roots(MonicPoly(fp));
      double worst = 0;
      for (int j = 1; j <= 3; ++j) {
        RealAlgebraic a = base.rho(3, j), b = pert.rho(3, j);
        a.refine_below(refine_width);
        b.refine_below(refine_width);
        worst = std::max(worst, std::abs(a.to_double() - b.to_double()));
      }
      CHECK(worst <= prev + 2e-8);
      prev = worst;
      if (e == 6) at_minus6 = worst;
    }
    CHECK(at_minus6 < 1e-2);
  }
}

TEST_CASE("complex square roots: spec examples") {
  ComplexSqrtCover c1 = complex_sqrt_cover(Rational(4), Rational(0));
  CHECK(algebraic_compare(c1.u, rat(2)) == 0);
  CHECK(algebraic_compare(c1.v, rat(0)) == 0);
  CHECK(c1.identity_ok);
  CHECK(c1.z1_squared_ok);

  ComplexSqrtCover c2 = complex_sqrt_cover(Rational(-1), Rational(0));
  CHECK(algebraic_compare(c2.u, rat(0)) == 0);
  CHECK(algebraic_compare(c2.v, rat(1)) == 0);
  CHECK(c2.identity_ok);
  CHECK(c2.z1_squared_ok);

  ComplexSqrtCover c3 = complex_sqrt_cover(Rational(0), Rational(2));
  CHECK(algebraic_compare(c3.u, rat(1)) == 0);
  CHECK(algebraic_compare(c3.v, rat(1)) == 0);
  CHECK(c3.identity_ok);
  CHECK(c3.z1_squared_ok);
}

TEST_CASE("complex square roots: random rational inputs") {
  std::mt19937 rng(61);
  for (int trial = 0; trial < 15; ++trial) {
    Rational a = random_rational(rng, 6), b = random_rational(rng, 6);
    ComplexSqrtCover c = complex_sqrt_cover(a, b);
    CHECK(c.identity_ok);
    CHECK(c.z1_squared_ok);
    // u v b >= 0 for the returned (sign-adjusted) pair.
    int su = algebraic_compare(c.u, rat(0));
    int sv = algebraic_compare(c.v, rat(0));
    CHECK(su * sv * b.sign() >= 0);
    CHECK(su >= 0);
    // f1, f2 have the announced shape.
    CHECK(algebraic_compare(c.f1.coeffs[2], rat(1)) == 0);
    CHECK(algebraic_compare(c.f2.coeffs[2], rat(1)) == 0);
    CHECK(algebraic_compare(c.f1.coeffs[0], c.f2.coeffs[0]) == 0);
    CHECK(algebraic_compare(c.f1.coeffs[1], algebraic_negate(c.f2.coeffs[1])) == 0);
  }
}
