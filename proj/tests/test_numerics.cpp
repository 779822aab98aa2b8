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

#include "realalg/mean_value.hpp"
#include "realalg/real_algebraic.hpp"
#include "realalg/unipoly.hpp"
#include "test_util.hpp"

using namespace realalg;
using namespace realalg::testutil;

TEST_CASE("rational parse and print round-trip") {
  CHECK(Rational::parse("3/4").str() == "3/4");
  CHECK(Rational::parse("-6/4").str() == "-3/2");
  CHECK(Rational::parse("7").str() == "7");
  CHECK(Rational::parse("-0").str() == "0");
  CHECK(Rational(Int(2), Int(-4)).str() == "-1/2");
  CHECK_THROWS_AS(Rational::parse("1/0"), std::domain_error);
  CHECK_THROWS_AS(Rational::parse("x"), std::invalid_argument);
  CHECK_THROWS_AS(Rational(1) / Rational(0), std::domain_error);
}

TEST_CASE("rational floor and ceil") {
  CHECK(rational_floor(Rational(7, 2)) == 3);
  CHECK(rational_floor(Rational(-7, 2)) == -4);
  CHECK(rational_ceil(Rational(7, 2)) == 4);
  CHECK(rational_ceil(Rational(-7, 2)) == -3);
  CHECK(rational_floor(Rational(4)) == 4);
}

TEST_CASE("polynomial text round-trip") {
  const char* samples[] = {
      "x^3 - 6*x^2 + 11*x - 6", "x^2 - 2", "0", "5", "-x", "1/2*x^4 + 2/3", "x", "-3/7",
  };
  for (const char* s : samples) {
    UniPoly p = UniPoly::parse(s);
    CHECK(p.str() == s);
    CHECK(UniPoly::parse(p.str()) == p);
  }
  CHECK(UniPoly::parse("2*x + x") == UniPoly::parse("3*x"));
  CHECK_THROWS_AS(UniPoly::parse("x +"), std::invalid_argument);
  CHECK_THROWS_AS(UniPoly::parse("y", "x"), std::invalid_argument);
}

TEST_CASE("polynomial division and gcd") {
  UniPoly f = UniPoly::parse("x^3 - 6*x^2 + 11*x - 6");
  UniPoly d = UniPoly::parse("x - 2");
  auto [q, r] = f.divmod(d);
  CHECK(r.is_zero());
  CHECK(q * d == f);
  CHECK(poly_gcd(f, d) == d.monic());
  CHECK(poly_gcd(f, UniPoly::parse("x - 5")).degree() == 0);

  UniPoly sq = UniPoly::parse("x^2 - 2*x + 1");
  CHECK(squarefree_part(sq) == UniPoly::parse("x - 1"));
}

TEST_CASE("normalized derivative examples") {
  MonicPoly f2(UniPoly::parse("x^2 - 4"));
  CHECK(normalized_derivative(f2, 1).poly() == UniPoly::parse("x"));

  MonicPoly f3(UniPoly::parse("x^3 - 6*x^2 + 11*x - 6"));
  CHECK(normalized_derivative(f3, 0).poly() == f3.poly());
  CHECK(normalized_derivative(f3, 1).poly() == UniPoly::parse("x^2 - 4*x + 11/3"));
  CHECK_THROWS_AS(normalized_derivative(f3, 3), std::domain_error);
}

TEST_CASE("normalized derivative composes additively") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 40; ++trial) {
    MonicPoly f = random_monic(rng, 5);
    for (unsigned k1 = 0; k1 < 4; ++k1) {
      for (unsigned k2 = 0; k1 + k2 < 5; ++k2) {
        MonicPoly lhs = normalized_derivative(normalized_derivative(f, k1), k2);
        MonicPoly rhs = normalized_derivative(f, k1 + k2);
        CHECK(lhs.poly() == rhs.poly());
      }
    }
  }
}

TEST_CASE("root isolation examples") {
  auto roots = isolate_real_roots(UniPoly::parse("x^2 - 4"));
  REQUIRE(roots.size() == 2);
  CHECK(roots[0].first.is_rational());
  CHECK(roots[0].first.rational_value() == Rational(-2));
  CHECK(roots[1].first.rational_value() == Rational(2));
  CHECK(roots[0].second == 1);

  CHECK(isolate_real_roots(UniPoly::parse("x^2 + 1")).empty());
  CHECK_THROWS_AS(isolate_real_roots(UniPoly()), std::domain_error);

  auto sqrt2 = isolate_real_roots(UniPoly::parse("x^2 - 2"));
  REQUIRE(sqrt2.size() == 2);
  CHECK_FALSE(sqrt2[0].first.is_rational());
  // Sturm oracle: one root in each of [-2,-1] and [1,2], and the isolated
  // values lie in those ranges.
  CHECK(sturm_count(UniPoly::parse("x^2 - 2"), Rational(-2), Rational(-1)) == 1);
  CHECK(sturm_count(UniPoly::parse("x^2 - 2"), Rational(1), Rational(2)) == 1);
  CHECK(algebraic_compare(sqrt2[0].first, RealAlgebraic(Rational(-2))) > 0);
  CHECK(algebraic_compare(sqrt2[0].first, RealAlgebraic(Rational(-1))) < 0);
  CHECK(algebraic_compare(sqrt2[1].first, RealAlgebraic(Rational(1))) > 0);
  CHECK(algebraic_compare(sqrt2[1].first, RealAlgebraic(Rational(2))) < 0);
}

TEST_CASE("root isolation counts multiplicities and bounds their sum") {
  std::mt19937 rng(11);
  // (x - 1)^2 (x + 2): double root.
  UniPoly f = UniPoly::parse("x - 1") * UniPoly::parse("x - 1") * UniPoly::parse("x + 2");
  auto roots = isolate_real_roots(f);
  REQUIRE(roots.size() == 2);
  CHECK(roots[0].first.rational_value() == Rational(-2));
  CHECK(roots[0].second == 1);
  CHECK(roots[1].first.rational_value() == Rational(1));
  CHECK(roots[1].second == 2);

  for (int trial = 0; trial < 25; ++trial) {
    UniPoly g = random_poly(rng, 6);
    if (g.degree() < 1) continue;
    auto rs = isolate_real_roots(g);
    int total = 0;
    for (auto& [root, mult] : rs) {
      total += mult;
      // Endpoint signs of the squarefree part differ across each isolated
      // interval.
      if (!root.is_rational()) {
        UniPoly sf = squarefree_part(g);
        CHECK(sf.eval(root.lower()).sign() * sf.eval(root.upper()).sign() < 0);
      }
    }
    CHECK(total <= g.degree());
  }
}

TEST_CASE("algebraic sign examples") {
  auto sqrt2 = isolate_real_roots(UniPoly::parse("x^2 - 2"))[1].first;
  CHECK(algebraic_sign(UniPoly::parse("x^2 - 4"), sqrt2) == -1);
  CHECK(algebraic_sign(UniPoly::parse("x^2 - 2"), sqrt2) == 0);
  CHECK(algebraic_sign(UniPoly::constant(1), sqrt2) == 1);
  CHECK(algebraic_sign(UniPoly(), sqrt2) == 0);
}

TEST_CASE("algebraic compare examples") {
  auto sqrt2 = isolate_real_roots(UniPoly::parse("x^2 - 2"))[1].first;
  auto minus_sqrt2 = isolate_real_roots(UniPoly::parse("x^2 - 2"))[0].first;
  CHECK(algebraic_compare(sqrt2, RealAlgebraic(Rational(3, 2))) < 0);
  CHECK(algebraic_compare(sqrt2, sqrt2) == 0);
  CHECK(algebraic_compare(minus_sqrt2, sqrt2) < 0);
  CHECK(algebraic_compare(algebraic_negate(sqrt2), minus_sqrt2) == 0);
}

TEST_CASE("algebraic compare is a total order consistent with sign tests") {
  std::mt19937 rng(13);
  std::vector<RealAlgebraic> values;
  for (int trial = 0; trial < 8; ++trial) {
    UniPoly g = random_poly(rng, 4);
    if (g.degree() < 1) continue;
    for (auto& [root, mult] : isolate_real_roots(g)) values.push_back(root);
  }
  for (int i = 0; i < 5; ++i) values.push_back(RealAlgebraic(random_rational(rng)));

  for (const auto& a : values) {
    for (const auto& b : values) {
      int ab = algebraic_compare(a, b), ba = algebraic_compare(b, a);
      CHECK(ab == -ba);
      // Against rationals, compare must agree with the sign of x - q at a.
      if (b.is_rational() && !a.is_rational()) {
        UniPoly shift = UniPoly::variable() - UniPoly::constant(b.rational_value());
        CHECK(ab == algebraic_sign(shift, a));
      }
      for (const auto& c : values) {
        if (ab <= 0 && algebraic_compare(b, c) <= 0) CHECK(algebraic_compare(a, c) <= 0);
      }
    }
  }
}

TEST_CASE("rational collapse of isolated roots") {
  // The unique root of x^2 - 4 in (1, 3) is the rational 2.
  RealAlgebraic r = RealAlgebraic::from_root(UniPoly::parse("x^2 - 4"), Rational(1), Rational(3));
  CHECK(r.is_rational());
  CHECK(r.rational_value() == Rational(2));
  RealAlgebraic s =
      RealAlgebraic::from_root(UniPoly::parse("3*x - 1"), Rational(0), Rational(1));
  CHECK(s.is_rational());
  CHECK(s.rational_value() == Rational(1, 3));
}

TEST_CASE("eval at algebraic points") {
  auto sqrt2 = isolate_real_roots(UniPoly::parse("x^2 - 2"))[1].first;
  RealAlgebraic two = eval_algebraic(UniPoly::parse("x^2"), sqrt2);
  CHECK(two.is_rational());
  CHECK(two.rational_value() == Rational(2));
  RealAlgebraic v = eval_algebraic(UniPoly::parse("x^3 - x"), sqrt2);
  // 2 sqrt2 - sqrt2 = sqrt2.
  CHECK(algebraic_compare(v, sqrt2) == 0);
}

TEST_CASE("mean value identity: the degree-4 table") {
  auto lambdas = mean_value_nodes_deg4();
  auto weights = mean_value_weights_deg4();
  std::mt19937 rng(17);
  for (int trial = 0; trial < 100; ++trial) {
    UniPoly f = random_poly(rng, 4);
    Rational a = random_rational(rng), b = random_rational(rng);
    CHECK(check_mean_value(f, a, b, lambdas, weights));
  }
}

TEST_CASE("mean value identity: linear polynomials with any weights summing to one") {
  std::mt19937 rng(19);
  for (int trial = 0; trial < 50; ++trial) {
    UniPoly f = random_poly(rng, 1);
    std::vector<Rational> lambdas, weights;
    Rational sum = 0;
    for (int i = 0; i < 3; ++i) {
      lambdas.push_back(random_rational(rng));
      Rational w = random_rational(rng);
      weights.push_back(w);
      sum += w;
    }
    lambdas.push_back(random_rational(rng));
    weights.push_back(Rational(1) - sum);
    CHECK(check_mean_value(f, random_rational(rng), random_rational(rng), lambdas, weights));
  }
}

TEST_CASE("mean value identity: single node cannot be exact at degree 4") {
  std::vector<Rational> lambdas = {Rational(1, 2), Rational(0), Rational(0), Rational(0)};
  std::vector<Rational> weights = {Rational(1), Rational(0), Rational(0), Rational(0)};
  CHECK_FALSE(check_mean_value(UniPoly::parse("x^4"), Rational(0), Rational(1), lambdas, weights));
  CHECK_THROWS_AS(
      check_mean_value(UniPoly::parse("x^5"), Rational(0), Rational(1), lambdas, weights),
      std::domain_error);
}
