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

#include "realalg/sup_inf_nf.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace realalg {

namespace {

using Families = std::vector<std::vector<MultiPoly>>;
using Op = TermNode::Op;

// Sup-inf rewriting is a disjunctive-normal-form style expansion and can
// blow up combinatorially on product-heavy terms; fail fast instead of
// grinding through an unusable form.
constexpr size_t kMaxFamilies = 20000;
constexpr size_t kMaxCombinations = 200000;

[[noreturn]] void too_large() {
  throw std::runtime_error("to_sup_inf_nf: normal form exceeds the size limit");
}

bool poly_less(const MultiPoly& a, const MultiPoly& b) { return MultiPoly::compare(a, b) < 0; }

// Drops families that are strict supersets of another family: their inf
// can never exceed the subset's, so the sup is unchanged.
void absorb(Families& f) {
  std::vector<std::vector<MultiPoly>> kept;
  auto contains = [](const std::vector<MultiPoly>& big, const std::vector<MultiPoly>& small) {
    size_t i = 0;
    for (const MultiPoly& s : small) {
      while (i < big.size() && MultiPoly::compare(big[i], s) < 0) ++i;
      if (i == big.size() || MultiPoly::compare(big[i], s) != 0) return false;
      ++i;
    }
    return true;
  };
  for (size_t i = 0; i < f.size(); ++i) {
    bool dominated = false;
    for (size_t j = 0; j < f.size() && !dominated; ++j) {
      if (i == j) continue;
      if (f[j].size() < f[i].size() && contains(f[i], f[j])) dominated = true;
    }
    if (!dominated) kept.push_back(std::move(f[i]));
  }
  f = std::move(kept);
}

void normalize(Families& f) {
  for (auto& fam : f) {
    std::sort(fam.begin(), fam.end(), poly_less);
    fam.erase(std::unique(fam.begin(), fam.end()), fam.end());
  }
  std::sort(f.begin(), f.end(), [](const auto& x, const auto& y) {
    return std::lexicographical_compare(x.begin(), x.end(), y.begin(), y.end(), poly_less);
  });
  f.erase(std::unique(f.begin(), f.end()), f.end());
  // Above a small size, prune dominated families; this keeps the common
  // golden forms verbatim while containing the expansion.
  if (f.size() > 64) absorb(f);
  if (f.size() > kMaxFamilies) too_large();
}

Families nf_poly(MultiPoly p) { return {{std::move(p)}}; }

Families nf_sup(const Families& a, const Families& b) {
  Families r = a;
  r.insert(r.end(), b.begin(), b.end());
  normalize(r);
  return r;
}

Families nf_inf(const Families& a, const Families& b) {
  if (a.size() * b.size() > kMaxCombinations) too_large();
  Families r;
  r.reserve(a.size() * b.size());
  for (const auto& fa : a) {
    for (const auto& fb : b) {
      std::vector<MultiPoly> fam = fa;
      fam.insert(fam.end(), fb.begin(), fb.end());
      r.push_back(std::move(fam));
    }
  }
  normalize(r);
  return r;
}

Families nf_add(const Families& a, const Families& b) {
  size_t total = 0;
  for (const auto& fa : a)
    for (const auto& fb : b) {
      total += fa.size() * fb.size();
      if (total > kMaxCombinations) too_large();
    }
  Families r;
  r.reserve(a.size() * b.size());
  for (const auto& fa : a) {
    for (const auto& fb : b) {
      std::vector<MultiPoly> fam;
      fam.reserve(fa.size() * fb.size());
      for (const auto& pa : fa)
        for (const auto& pb : fb) fam.push_back(pa + pb);
      r.push_back(std::move(fam));
    }
  }
  normalize(r);
  return r;
}

// -sup_i inf_j f_ij = sup over the choice functions of the negated picks.
Families nf_neg(const Families& a) {
  size_t combos = 1;
  for (const auto& fam : a) {
    combos *= fam.size();
    if (combos > kMaxCombinations) too_large();
  }
  Families r;
  std::vector<size_t> pick(a.size(), 0);
  for (;;) {
    std::vector<MultiPoly> fam;
    fam.reserve(a.size());
    for (size_t i = 0; i < a.size(); ++i) fam.push_back(-a[i][pick[i]]);
    r.push_back(std::move(fam));
    size_t k = 0;
    while (k < a.size()) {
      if (++pick[k] < a[k].size()) break;
      pick[k] = 0;
      ++k;
    }
    if (k == a.size()) break;
  }
  normalize(r);
  return r;
}

Families nf_scale(const Rational& c, const Families& a) {
  if (c.sign() < 0) return nf_neg(nf_scale(-c, a));
  if (c.is_zero()) {
    Families r = {{MultiPoly::constant(a.empty() || a[0].empty() ? 0 : a[0][0].nvars(),
                                       Rational(0))}};
    return r;
  }
  Families r = a;
  for (auto& fam : r)
    for (auto& p : fam) p = c * p;
  normalize(r);
  return r;
}

struct NfBuilder {
  size_t nvars;
  std::vector<std::string> vars;

  MultiPoly zero_poly() const { return MultiPoly::constant(nvars, Rational(0)); }
  Families zero_nf() const { return {{zero_poly()}}; }

  size_t var_index(const std::string& name) const {
    auto it = std::lower_bound(vars.begin(), vars.end(), name);
    if (it == vars.end() || *it != name)
      throw std::logic_error("to_sup_inf_nf: variable outside the declared context: " + name);
    return static_cast<size_t>(it - vars.begin());
  }

  bool lattice_free(const Term& t) const {
    if (!t) return true;
    switch (t->op) {
      case Op::Sup:
      case Op::Inf:
      case Op::Pos:
      case Op::NegPart:
      case Op::Abs:
        return false;
      default:
        return lattice_free(t->a) && lattice_free(t->b);
    }
  }

  MultiPoly to_poly(const Term& t) const {
    switch (t->op) {
      case Op::Const:
        return MultiPoly::constant(nvars, t->value);
      case Op::Var:
        return MultiPoly::variable(nvars, var_index(t->name));
      case Op::Neg:
        return -to_poly(t->a);
      case Op::Add:
        return to_poly(t->a) + to_poly(t->b);
      case Op::Sub:
        return to_poly(t->a) - to_poly(t->b);
      case Op::Mul:
        return to_poly(t->a) * to_poly(t->b);
      default:
        throw std::logic_error("to_sup_inf_nf: lattice node in polynomial context");
    }
  }

  // P * T for a single polynomial P and normal form T: split P into its
  // positive and negative parts and distribute each with afr7 per leaf.
  Families mul_poly(const MultiPoly& p, const Families& t) const {
    if (p.is_constant()) return nf_scale(p.constant_value(), t);
    if (t.size() == 1 && t[0].size() == 1) return nf_poly(p * t[0][0]);
    return nf_add(pos_part_times(t, p), nf_neg(pos_part_times(t, -p)));
  }

  // v+ * T = sup_i inf_j (u_ij v+), each leaf expanded with afr7.
  Families pos_part_times(const Families& t, const MultiPoly& v) const {
    Families acc;
    bool first_family = true;
    for (const auto& fam : t) {
      Families fam_nf;
      bool first = true;
      for (const MultiPoly& u : fam) {
        Families leaf = afr7(u, v);
        fam_nf = first ? std::move(leaf) : nf_inf(fam_nf, leaf);
        first = false;
      }
      acc = first_family ? std::move(fam_nf) : nf_sup(acc, fam_nf);
      first_family = false;
    }
    return acc;
  }

  // u v+ = (u v /\ (u^2 + 1) v) \/ (-(u^2 + 1) v /\ 0).
  Families afr7(const MultiPoly& u, const MultiPoly& v) const {
    MultiPoly u2p1v = (u * u + MultiPoly::constant(nvars, Rational(1))) * v;
    Families r = {{u * v, u2p1v}, {-u2p1v, zero_poly()}};
    normalize(r);
    return r;
  }

  // P * r at the term level, keeping the direct afr7 shape for the common
  // poly * pos(u) / sup / inf patterns.
  Families mul_poly_term(const MultiPoly& p, const Term& r) {
    if (lattice_free(r)) return nf_poly(p * to_poly(r));
    if (p.is_constant()) return nf_scale(p.constant_value(), build(r));
    switch (r->op) {
      case Op::Pos:
        return afr7_on_term(p, r->a);
      case Op::NegPart:
        return afr7_on_term(p, t_neg(r->a));
      case Op::Abs:  // |u| = u+ + (-u)+
        return nf_add(afr7_on_term(p, r->a), afr7_on_term(p, t_neg(r->a)));
      case Op::Sup:  // u \/ v = (u - v)+ + v
        return nf_add(afr7_on_term(p, t_sub(r->a, r->b)), mul_poly_term(p, r->b));
      case Op::Inf:  // u /\ v = -((-u) \/ (-v))
        return nf_neg(mul_poly_term(p, t_sup(t_neg(r->a), t_neg(r->b))));
      case Op::Neg:
        return nf_neg(mul_poly_term(p, r->a));
      case Op::Add:
        return nf_add(mul_poly_term(p, r->a), mul_poly_term(p, r->b));
      case Op::Sub:
        return nf_add(mul_poly_term(p, r->a), nf_neg(mul_poly_term(p, r->b)));
      case Op::Mul:
        if (lattice_free(r->a)) return mul_poly_term(p * to_poly(r->a), r->b);
        if (lattice_free(r->b)) return mul_poly_term(p * to_poly(r->b), r->a);
        return mul_poly(p, build(r));
      default:
        return mul_poly(p, build(r));
    }
  }

  // P * u+ where u is an arbitrary term.
  Families afr7_on_term(const MultiPoly& p, const Term& u) {
    Families unf = build(u);
    if (unf.size() == 1 && unf[0].size() == 1) return afr7(p, unf[0][0]);
    MultiPoly p2p1 = p * p + MultiPoly::constant(nvars, Rational(1));
    Families pv = mul_poly(p, unf);
    Families p2v = mul_poly(p2p1, unf);
    return nf_sup(nf_inf(pv, p2v), nf_inf(nf_neg(p2v), zero_nf()));
  }

  // General product of two normal forms: A B = A+ B - A- B with the
  // nonnegative parts distributed over B and afr7 at the leaves.
  Families mul_general(const Families& a, const Families& b) {
    Families apos = nf_sup(a, zero_nf());
    Families aneg = nf_sup(nf_neg(a), zero_nf());
    return nf_add(nonneg_times(apos, b), nf_neg(nonneg_times(aneg, b)));
  }

  // U * B for pointwise nonnegative U: distribute U through B's lattice
  // structure, then U * v = v+ U - (-v)+ U per polynomial leaf v.
  Families nonneg_times(const Families& u, const Families& b) {
    Families acc;
    bool first_family = true;
    for (const auto& fam : b) {
      Families fam_nf;
      bool first = true;
      for (const MultiPoly& v : fam) {
        Families leaf = nf_add(pos_part_times(u, v), nf_neg(pos_part_times(u, -v)));
        fam_nf = first ? std::move(leaf) : nf_inf(fam_nf, leaf);
        first = false;
      }
      acc = first_family ? std::move(fam_nf) : nf_sup(acc, fam_nf);
      first_family = false;
    }
    return acc;
  }

  Families build(const Term& t) {
    switch (t->op) {
      case Op::Const:
        return nf_poly(MultiPoly::constant(nvars, t->value));
      case Op::Var:
        return nf_poly(MultiPoly::variable(nvars, var_index(t->name)));
      case Op::Neg:
        return nf_neg(build(t->a));
      case Op::Add:
        return nf_add(build(t->a), build(t->b));
      case Op::Sub:
        return nf_add(build(t->a), nf_neg(build(t->b)));
      case Op::Sup:
        return nf_sup(build(t->a), build(t->b));
      case Op::Inf:
        return nf_inf(build(t->a), build(t->b));
      case Op::Pos:
        return nf_sup(build(t->a), zero_nf());
      case Op::NegPart:
        return nf_sup(nf_neg(build(t->a)), zero_nf());
      case Op::Abs: {
        Families a = build(t->a);
        return nf_sup(a, nf_neg(a));
      }
      case Op::Mul: {
        if (lattice_free(t->a) && lattice_free(t->b))
          return nf_poly(to_poly(t->a) * to_poly(t->b));
        if (lattice_free(t->a)) return mul_poly_term(to_poly(t->a), t->b);
        if (lattice_free(t->b)) return mul_poly_term(to_poly(t->b), t->a);
        return mul_general(build(t->a), build(t->b));
      }
    }
    throw std::logic_error("to_sup_inf_nf: unknown node");
  }
};

}  // namespace

Rational SupInfNF::eval(const std::vector<Rational>& point) const {
  if (families.empty()) throw std::logic_error("SupInfNF::eval: empty form");
  bool first_fam = true;
  Rational best = 0;
  for (const auto& fam : families) {
    bool first = true;
    Rational inner = 0;
    for (const MultiPoly& p : fam) {
      Rational v = p.eval(point);
      inner = first ? v : min(inner, v);
      first = false;
    }
    best = first_fam ? inner : max(best, inner);
    first_fam = false;
  }
  return best;
}

Rational SupInfNF::eval(const std::map<std::string, Rational>& point) const {
  std::vector<Rational> p(vars.size());
  for (size_t k = 0; k < vars.size(); ++k) {
    auto it = point.find(vars[k]);
    if (it == point.end())
      throw std::domain_error("SupInfNF::eval: unbound variable '" + vars[k] + "'");
    p[k] = it->second;
  }
  return eval(p);
}

std::string SupInfNF::str() const {
  std::ostringstream os;
  os << "sup{";
  for (size_t i = 0; i < families.size(); ++i) {
    if (i) os << ", ";
    os << "inf{";
    for (size_t j = 0; j < families[i].size(); ++j) {
      if (j) os << ", ";
      os << families[i][j].str(vars);
    }
    os << "}";
  }
  os << "}";
  return os.str();
}

SupInfNF to_sup_inf_nf(const Term& t) { return to_sup_inf_nf(t, term_variables(t)); }

SupInfNF to_sup_inf_nf(const Term& t, const std::vector<std::string>& vars) {
  std::vector<std::string> sorted = vars;
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  NfBuilder builder{sorted.size(), sorted};
  SupInfNF nf;
  nf.vars = std::move(sorted);
  nf.families = builder.build(t);
  return nf;
}

void nf_absorb(SupInfNF& nf) { absorb(nf.families); }

}  // namespace realalg
