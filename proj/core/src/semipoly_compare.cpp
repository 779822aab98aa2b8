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

#include "realalg/semipoly_compare.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "realalg/real_algebraic.hpp"

namespace realalg {

namespace {

// Inner polynomials of a univariate normal form, as UniPoly families.
std::vector<std::vector<UniPoly>> to_uni_families(const SupInfNF& nf) {
  std::vector<std::vector<UniPoly>> out;
  out.reserve(nf.families.size());
  for (const auto& fam : nf.families) {
    std::vector<UniPoly> f;
    f.reserve(fam.size());
    for (const MultiPoly& p : fam) f.push_back(p.to_unipoly(0));
    out.push_back(std::move(f));
  }
  return out;
}

Rational eval_max_min(const std::vector<std::vector<UniPoly>>& fams, const Rational& x) {
  Rational best = 0;
  bool first_fam = true;
  for (const auto& fam : fams) {
    Rational inner = 0;
    bool first = true;
    for (const UniPoly& p : fam) {
      Rational v = p.eval(x);
      inner = first ? v : min(inner, v);
      first = false;
    }
    best = first_fam ? inner : max(best, inner);
    first_fam = false;
  }
  return best;
}

// The polynomial the max-min selects at x (ties cannot occur at cell
// samples; at breakpoints any realizer has the realized value).
UniPoly realizer_at(const std::vector<std::vector<UniPoly>>& fams, const Rational& x) {
  UniPoly best;
  Rational best_v = 0;
  bool first_fam = true;
  for (const auto& fam : fams) {
    UniPoly inner;
    Rational inner_v = 0;
    bool first = true;
    for (const UniPoly& p : fam) {
      Rational v = p.eval(x);
      if (first || v < inner_v) {
        inner = p;
        inner_v = v;
      }
      first = false;
    }
    if (first_fam || inner_v > best_v) {
      best = inner;
      best_v = inner_v;
    }
    first_fam = false;
  }
  return best;
}

// Realized value of the max-min at an algebraic point, decided by exact
// sign tests on differences.
RealAlgebraic value_at_algebraic(const std::vector<std::vector<UniPoly>>& fams,
                                 const RealAlgebraic& x) {
  UniPoly best;
  bool first_fam = true;
  for (const auto& fam : fams) {
    UniPoly inner;
    bool first = true;
    for (const UniPoly& p : fam) {
      if (first || algebraic_sign(p - inner, x) < 0) inner = p;
      first = false;
    }
    if (first_fam || algebraic_sign(inner - best, x) > 0) best = inner;
    first_fam = false;
  }
  return eval_algebraic(best, x);
}

// A rational point strictly between two distinct algebraic values.
Rational rational_between(RealAlgebraic a, RealAlgebraic b) {
  for (;;) {
    Rational ahi = a.is_rational() ? a.rational_value() : a.upper();
    Rational blo = b.is_rational() ? b.rational_value() : b.lower();
    if (ahi < blo) return (ahi + blo) / Rational(2);
    // Both isolated with touching bounds: the shared bound separates them.
    if (ahi == blo && !a.is_rational() && !b.is_rational()) return ahi;
    a.refine();
    b.refine();
  }
}

Rational rational_below(const RealAlgebraic& a) {
  return (a.is_rational() ? a.rational_value() : a.lower()) - Rational(1);
}

Rational rational_above(const RealAlgebraic& a) {
  return (a.is_rational() ? a.rational_value() : a.upper()) + Rational(1);
}

}  // namespace

SemipolyCompareResult univar_semipoly_compare(const Term& s1, const Term& s2) {
  std::vector<std::string> vars1 = term_variables(s1), vars2 = term_variables(s2);
  std::set<std::string> all(vars1.begin(), vars1.end());
  all.insert(vars2.begin(), vars2.end());
  if (all.size() > 1)
    throw std::domain_error("univar_semipoly_compare: more than one variable");
  std::vector<std::string> ctx = {all.empty() ? std::string("x") : *all.begin()};

  auto fams1 = to_uni_families(to_sup_inf_nf(s1, ctx));
  auto fams2 = to_uni_families(to_sup_inf_nf(s2, ctx));

  // All pairwise differences of inner polynomials from both forms.
  std::vector<UniPoly> inner;
  for (const auto* fams : {&fams1, &fams2})
    for (const auto& fam : *fams)
      for (const UniPoly& p : fam) inner.push_back(p);

  std::vector<RealAlgebraic> breakpoints;
  for (size_t i = 0; i < inner.size(); ++i) {
    for (size_t j = i + 1; j < inner.size(); ++j) {
      UniPoly diff = inner[i] - inner[j];
      if (diff.is_zero() || diff.degree() < 1) continue;
      for (auto& [root, mult] : isolate_real_roots(diff)) {
        (void)mult;
        breakpoints.push_back(std::move(root));
      }
    }
  }
  std::sort(breakpoints.begin(), breakpoints.end(),
            [](const RealAlgebraic& a, const RealAlgebraic& b) {
              return algebraic_compare(a, b) < 0;
            });
  breakpoints.erase(std::unique(breakpoints.begin(), breakpoints.end(),
                                [](const RealAlgebraic& a, const RealAlgebraic& b) {
                                  return algebraic_compare(a, b) == 0;
                                }),
                    breakpoints.end());

  // Rational samples, one per open cell (plus two outer points).
  std::vector<Rational> samples;
  if (breakpoints.empty()) {
    // No breakpoints: the selected polynomials are the same on all of R.
    samples = {Rational(0)};
  } else {
    samples.push_back(rational_below(breakpoints.front()));
    for (size_t i = 0; i + 1 < breakpoints.size(); ++i)
      samples.push_back(rational_between(breakpoints[i], breakpoints[i + 1]));
    samples.push_back(rational_above(breakpoints.back()));
  }

  SemipolyCompareResult out;
  auto check_cell = [&](size_t idx) -> bool {
    const Rational& x = samples[idx];
    UniPoly r1 = realizer_at(fams1, x);
    UniPoly r2 = realizer_at(fams2, x);
    if (r1 == r2) return true;
    out.equal = false;
    out.witness = x;
    out.lhs = eval_max_min(fams1, x);
    out.rhs = eval_max_min(fams2, x);
    return false;
  };

  for (size_t i = 0; i <= breakpoints.size(); ++i) {
    if (!check_cell(i)) return out;
    if (i < breakpoints.size()) {
      RealAlgebraic v1 = value_at_algebraic(fams1, breakpoints[i]);
      RealAlgebraic v2 = value_at_algebraic(fams2, breakpoints[i]);
      if (algebraic_compare(v1, v2) != 0)
        throw std::logic_error(
            "univar_semipoly_compare: breakpoint disagreement without a cell disagreement");
    }
  }
  out.equal = true;
  return out;
}

std::vector<Rational> tri_sort(std::vector<Rational> values) {
  if (values.empty()) throw std::domain_error("tri_sort: empty input");
  // Tri_k is the k-th order statistic: the k-subset minimizing the inner
  // max consists of the k smallest values.
  std::sort(values.begin(), values.end());
  return values;
}

}  // namespace realalg
