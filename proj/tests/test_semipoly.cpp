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

#include <algorithm>
#include <random>

#include "realalg/semipoly_compare.hpp"
#include "realalg/sup_inf_nf.hpp"
#include "test_util.hpp"

using namespace realalg;
using namespace realalg::testutil;

namespace {

// Random lattice term over up to `nvars` variables with the given depth.
Term random_term(std::mt19937& rng, int depth, int nvars) {
  std::uniform_int_distribution<int> leaf(0, 3);
  std::uniform_int_distribution<int> var(0, nvars - 1);
  const char* names[] = {"x", "y", "z"};
  if (depth == 0) {
    if (leaf(rng) == 0) return t_const(random_rational(rng, 3));
    return t_var(names[var(rng)]);
  }
  std::uniform_int_distribution<int> op(0, 9);
  auto sub = [&] { return random_term(rng, depth - 1, nvars); };
  switch (op(rng)) {
    case 0:
      return t_neg(sub());
    case 1:
    case 2:
      return t_add(sub(), sub());
    case 3:
      return t_sub(sub(), sub());
    case 4:
      // One shallow factor: nested lattice-by-lattice products expand
      // combinatorially and are not representative of the term corpus.
      return t_mul(random_term(rng, std::min(depth - 1, 1), nvars), sub());
    case 5:
    case 6:
      return t_sup(sub(), sub());
    case 7:
      return t_inf(sub(), sub());
    case 8:
      return t_abs(sub());
    default:
      return t_pos(sub());
  }
}

std::map<std::string, Rational> random_point(std::mt19937& rng) {
  return {{"x", random_rational(rng, 6)},
          {"y", random_rational(rng, 6)},
          {"z", random_rational(rng, 6)}};
}

bool nf_equals(const SupInfNF& nf, const std::vector<std::vector<std::string>>& expected) {
  if (nf.families.size() != expected.size()) return false;
  for (const auto& want_fam : expected) {
    bool found = false;
    for (const auto& fam : nf.families) {
      if (fam.size() != want_fam.size()) continue;
      std::vector<std::string> got;
      for (const MultiPoly& p : fam) got.push_back(p.str(nf.vars));
      std::vector<std::string> want = want_fam;
      std::sort(got.begin(), got.end());
      std::sort(want.begin(), want.end());
      if (got == want) {
        found = true;
        break;
      }
    }
    if (!found) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("term parser and printer round-trip") {
  const char* samples[] = {
      "x \\/ y",
      "a + (b \\/ c)",
      "abs(x + y) - (abs(x) + abs(y))",
      "x /\\ (y \\/ 1/2)",
      "pos(x)*neg(y)",
      "-x + 3*y",
  };
  for (const char* s : samples) {
    Term t = parse_term(s);
    Term again = parse_term(term_str(t));
    CHECK(term_str(again) == term_str(t));
  }
  CHECK_THROWS_WITH_AS(parse_term("x +"), doctest::Contains("position"), std::invalid_argument);
  CHECK_THROWS_AS(parse_term("foo(x)"), std::invalid_argument);
}

TEST_CASE("eval_term: spec examples") {
  Term t1 = parse_term("x \\/ (1 - x)");
  CHECK(eval_term(t1, {{"x", Rational(1, 2)}}) == Rational(1, 2));
  CHECK(eval_term(parse_term("abs(x)"), {{"x", Rational(-3)}}) == Rational(3));
  CHECK(eval_term(parse_term("pos(x)*neg(x)"), {{"x", Rational(5)}}) == Rational(0));
  CHECK_THROWS_WITH_AS(eval_term(t1, {}), doctest::Contains("'x'"), std::domain_error);
}

TEST_CASE("sup-inf normal form: spec examples") {
  SupInfNF nf1 = to_sup_inf_nf(parse_term("x \\/ y"));
  CHECK(nf_equals(nf1, {{"x"}, {"y"}}));

  SupInfNF nf2 = to_sup_inf_nf(parse_term("a + (b \\/ c)"));
  CHECK(nf_equals(nf2, {{"a + b"}, {"a + c"}}));

  SupInfNF nf3 = to_sup_inf_nf(parse_term("a*(b \\/ 0)"));
  CHECK(nf_equals(nf3, {{"a*b", "a^2*b + b"}, {"-a^2*b - b", "0"}}));
}

TEST_CASE("normal form invariants: sorted, deduplicated, no empty family") {
  std::mt19937 rng(67);
  for (int trial = 0; trial < 60; ++trial) {
    Term t = random_term(rng, 4, 3);
    SupInfNF nf = to_sup_inf_nf(t);
    REQUIRE(!nf.families.empty());
    for (size_t i = 0; i < nf.families.size(); ++i) {
      REQUIRE(!nf.families[i].empty());
      for (size_t j = 0; j + 1 < nf.families[i].size(); ++j)
        CHECK(MultiPoly::compare(nf.families[i][j], nf.families[i][j + 1]) < 0);
    }
  }
}

TEST_CASE("normal form preserves the function") {
  std::mt19937 rng(71);
  int checked = 0;
  for (int trial = 0; trial < 100; ++trial) {
    Term t = random_term(rng, 4, 3);
    SupInfNF nf;
    try {
      nf = to_sup_inf_nf(t);
    } catch (const std::runtime_error&) {
      continue;  // oversized product chain
    }
    ++checked;
    for (int p = 0; p < 25; ++p) {
      auto point = random_point(rng);
      CHECK(eval_term(t, point) == nf.eval(point));
    }
  }
  CHECK(checked >= 90);
}

TEST_CASE("deeper terms with products also agree pointwise") {
  std::mt19937 rng(73);
  for (int trial = 0; trial < 25; ++trial) {
    Term t = random_term(rng, 5, 2);
    SupInfNF nf;
    try {
      nf = to_sup_inf_nf(t);
    } catch (const std::runtime_error&) {
      continue;
    }
    for (int p = 0; p < 10; ++p) {
      auto point = random_point(rng);
      CHECK(eval_term(t, point) == nf.eval(point));
    }
  }
}

TEST_CASE("univariate semipolynomial equality: spec examples") {
  // x \/ (1-x) versus 1 \/ x \/ (1-x): equal on Z, different on Q.
  auto res = univar_semipoly_compare(parse_term("x \\/ (1 - x)"),
                                     parse_term("1 \\/ x \\/ (1 - x)"));
  REQUIRE_FALSE(res.equal);
  CHECK(res.witness > Rational(0));
  CHECK(res.witness < Rational(1));
  CHECK(res.lhs != res.rhs);

  CHECK(univar_semipoly_compare(parse_term("abs(x)"), parse_term("x \\/ -x")).equal);
  CHECK(univar_semipoly_compare(parse_term("pos(x)*neg(x)"), parse_term("0")).equal);
  CHECK_THROWS_AS(univar_semipoly_compare(parse_term("x + y"), parse_term("x")),
                  std::domain_error);
}

TEST_CASE("univariate equality is symmetric and matches dense sampling") {
  std::mt19937 rng(79);
  for (int trial = 0; trial < 40; ++trial) {
    Term s1 = random_term(rng, 3, 1);
    Term s2 = random_term(rng, 3, 1);
    SemipolyCompareResult r12, r21;
    try {
      r12 = univar_semipoly_compare(s1, s2);
      r21 = univar_semipoly_compare(s2, s1);
    } catch (const std::runtime_error&) {
      continue;
    }
    CHECK(r12.equal == r21.equal);
    if (!r12.equal) {
      std::map<std::string, Rational> at{{"x", r12.witness}};
      CHECK(eval_term(s1, at) != eval_term(s2, at));
    }
    for (int p = 0; p < 50; ++p) {
      std::map<std::string, Rational> at{{"x", random_rational(rng, 20)}};
      if (eval_term(s1, at) != eval_term(s2, at)) {
        CHECK_FALSE(r12.equal);
        break;
      }
    }
  }
}

TEST_CASE("tri_sort: spec examples") {
  CHECK(tri_sort({Rational(3), Rational(1), Rational(2)}) ==
        std::vector<Rational>{Rational(1), Rational(2), Rational(3)});
  CHECK(tri_sort({Rational(5)}) == std::vector<Rational>{Rational(5)});
  CHECK(tri_sort({Rational(7), Rational(7)}) == std::vector<Rational>{Rational(7), Rational(7)});
  CHECK_THROWS_AS(tri_sort({}), std::domain_error);
}

TEST_CASE("tri_sort equals the min-over-k-subsets-of-max formula") {
  std::mt19937 rng(83);
  for (int trial = 0; trial < 30; ++trial) {
    std::uniform_int_distribution<int> len(1, 6);
    int n = len(rng);
    std::vector<Rational> xs;
    for (int i = 0; i < n; ++i) xs.push_back(random_rational(rng, 5));
    std::vector<Rational> tri = tri_sort(xs);
    REQUIRE(static_cast<int>(tri.size()) == n);

    for (int k = 1; k <= n; ++k) {
      // min over k-subsets of max over the subset.
      bool have = false;
      Rational best = 0;
      for (unsigned mask = 0; mask < (1u << n); ++mask) {
        if (__builtin_popcount(mask) != k) continue;
        Rational mx = 0;
        bool first = true;
        for (int i = 0; i < n; ++i) {
          if (!(mask & (1u << i))) continue;
          mx = first ? xs[i] : max(mx, xs[i]);
          first = false;
        }
        best = have ? min(best, mx) : mx;
        have = true;
      }
      CHECK(tri[k - 1] == best);

      // Duality: max over (n-k+1)-subsets of min over the subset.
      bool have2 = false;
      Rational dual = 0;
      for (unsigned mask = 0; mask < (1u << n); ++mask) {
        if (__builtin_popcount(mask) != n - k + 1) continue;
        Rational mn = 0;
        bool first = true;
        for (int i = 0; i < n; ++i) {
          if (!(mask & (1u << i))) continue;
          mn = first ? xs[i] : min(mn, xs[i]);
          first = false;
        }
        dual = have2 ? max(dual, mn) : mn;
        have2 = true;
      }
      CHECK(tri[k - 1] == dual);

      // Monotonicity.
      if (k > 1) CHECK(tri[k - 2] <= tri[k - 1]);
    }
  }
}
