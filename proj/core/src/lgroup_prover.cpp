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

#include "realalg/lgroup_prover.hpp"

#include <algorithm>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>
#include <variant>

#include "realalg/sup_inf_nf.hpp"

namespace realalg {

std::string Atom::str() const {
  return term_str(term) + (rel == Rel::EqZero ? " = 0" : " >= 0");
}

std::string Rule::str() const {
  std::ostringstream os;
  for (size_t i = 0; i < hypotheses.size(); ++i) {
    if (i) os << ", ";
    os << hypotheses[i].str();
  }
  os << " |- " << conclusion.str();
  return os.str();
}

namespace {

Atom parse_atom_text(const std::string& text) {
  auto build = [&](const std::string& lhs, const std::string& rhs, Atom::Rel rel, bool swap) {
    Term l = parse_term(lhs);
    Term r = parse_term(rhs);
    if (swap) std::swap(l, r);
    Term t = (r->op == TermNode::Op::Const && r->value.is_zero()) ? l : t_sub(l, r);
    return Atom{t, rel};
  };
  size_t pos;
  if ((pos = text.find(">=")) != std::string::npos)
    return build(text.substr(0, pos), text.substr(pos + 2), Atom::Rel::GeqZero, false);
  if ((pos = text.find("<=")) != std::string::npos)
    return build(text.substr(0, pos), text.substr(pos + 2), Atom::Rel::GeqZero, true);
  if ((pos = text.find('=')) != std::string::npos)
    return build(text.substr(0, pos), text.substr(pos + 1), Atom::Rel::EqZero, false);
  throw std::invalid_argument("rule parse error: atom without '=', '>=' or '<=': '" + text + "'");
}

}  // namespace

Rule parse_rule(const std::string& text) {
  size_t bar = text.find("|-");
  if (bar == std::string::npos)
    throw std::invalid_argument("rule parse error: missing '|-' in '" + text + "'");
  Rule rule;
  std::string hyps = text.substr(0, bar);
  std::string concl = text.substr(bar + 2);
  size_t start = 0;
  while (start < hyps.size()) {
    size_t comma = hyps.find(',', start);
    std::string chunk =
        comma == std::string::npos ? hyps.substr(start) : hyps.substr(start, comma - start);
    if (chunk.find_first_not_of(" \t") != std::string::npos)
      rule.hypotheses.push_back(parse_atom_text(chunk));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  rule.conclusion = parse_atom_text(concl);
  return rule;
}

int ProofTree::leaves() const {
  if (is_leaf) return 1;
  return left->leaves() + right->leaves();
}

int ProofTree::splits() const {
  if (is_leaf) return 0;
  return 1 + left->splits() + right->splits();
}

int ProofTree::depth() const {
  if (is_leaf) return 0;
  return 1 + std::max(left->depth(), right->depth());
}

namespace {

using Op = TermNode::Op;

// The additive fragment allows scalar multiples but no product of two
// non-constant terms.
bool is_constant_expr(const Term& t) {
  if (!t) return true;
  if (t->op == Op::Var) return false;
  return is_constant_expr(t->a) && is_constant_expr(t->b);
}

void check_additive(const Term& t) {
  if (!t) return;
  if (t->op == Op::Mul && !is_constant_expr(t->a) && !is_constant_expr(t->b))
    throw std::domain_error(
        "prove_lgroup_rule: multiplicative term outside the additive fragment: " + term_str(t));
  check_additive(t->a);
  check_additive(t->b);
}

LinForm to_linform(const MultiPoly& p, size_t nvars) {
  LinForm f(nvars);
  for (const auto& [expo, c] : p.terms()) {
    int total = 0;
    size_t var = nvars;
    for (size_t k = 0; k < expo.size(); ++k) {
      total += static_cast<int>(expo[k]);
      if (expo[k] > 0) var = k;
    }
    if (total == 0)
      f.constant = c;
    else if (total == 1)
      f.coeffs[var] = c;
    else
      throw std::domain_error("prove_lgroup_rule: nonlinear normal form entry");
  }
  return f;
}

struct NfAtom {
  std::vector<std::vector<LinForm>> families;
  Atom::Rel rel;
};

struct Blocking {
  LinForm lhs, rhs;
};

struct Prover {
  const Rule& rule;
  std::vector<std::string> vars;
  std::vector<NfAtom> hyps;
  NfAtom conclusion;
  LinearConstraint minus_one;

  using SearchOutcome = std::variant<std::unique_ptr<ProofTree>, std::vector<Rational>>;

  bool leq_entailed(const std::vector<LinearConstraint>& facts, const LinForm& a,
                    const LinForm& b) const {
    return linear_entailment(facts, LinearConstraint{b - a, LinRel::GeqZero}).entailed;
  }

  // Collapses one sup-inf atom under the decided facts, or reports the
  // lexicographically first undecided pair that blocks it.
  std::variant<LinForm, Blocking> collapse(const NfAtom& atom,
                                           const std::vector<LinearConstraint>& facts) const {
    std::vector<LinForm> realizers;
    for (const auto& fam : atom.families) {
      std::optional<LinForm> realizer;
      std::vector<Blocking> undecided;
      for (size_t i = 0; i < fam.size() && !realizer; ++i) {
        bool minimal = true;
        for (size_t j = 0; j < fam.size() && minimal; ++j) {
          if (i == j) continue;
          if (!leq_entailed(facts, fam[i], fam[j])) {
            minimal = false;
            if (!leq_entailed(facts, fam[j], fam[i])) {
              const LinForm& p = fam[i];
              const LinForm& q = fam[j];
              undecided.push_back(LinForm::compare(p, q) <= 0 ? Blocking{p, q} : Blocking{q, p});
            }
          }
        }
        if (minimal) realizer = fam[i];
      }
      if (!realizer) {
        if (undecided.empty())
          throw std::logic_error("prove_lgroup_rule: family without minimal element or split");
        auto best = std::min_element(undecided.begin(), undecided.end(),
                                     [](const Blocking& x, const Blocking& y) {
                                       int c = LinForm::compare(x.lhs, y.lhs);
                                       if (c != 0) return c < 0;
                                       return LinForm::compare(x.rhs, y.rhs) < 0;
                                     });
        return *best;
      }
      realizers.push_back(*realizer);
    }
    // Outer sup over the family realizers.
    std::vector<Blocking> undecided;
    for (size_t i = 0; i < realizers.size(); ++i) {
      bool maximal = true;
      for (size_t j = 0; j < realizers.size() && maximal; ++j) {
        if (i == j) continue;
        if (!leq_entailed(facts, realizers[j], realizers[i])) {
          maximal = false;
          if (!leq_entailed(facts, realizers[i], realizers[j])) {
            const LinForm& p = realizers[i];
            const LinForm& q = realizers[j];
            undecided.push_back(LinForm::compare(p, q) <= 0 ? Blocking{p, q} : Blocking{q, p});
          }
        }
      }
      if (maximal) return realizers[i];
    }
    if (undecided.empty())
      throw std::logic_error("prove_lgroup_rule: sup without maximal element or split");
    auto best = std::min_element(undecided.begin(), undecided.end(),
                                 [](const Blocking& x, const Blocking& y) {
                                   int c = LinForm::compare(x.lhs, y.lhs);
                                   if (c != 0) return c < 0;
                                   return LinForm::compare(x.rhs, y.rhs) < 0;
                                 });
    return *best;
  }

  SearchOutcome search(std::vector<LinearConstraint> facts) const {
    // Contradictory branches are vacuously closed.
    EntailResult vac = linear_entailment(facts, minus_one);
    if (vac.entailed) {
      auto leaf = std::make_unique<ProofTree>();
      leaf->is_leaf = true;
      leaf->leaf.system = std::move(facts);
      leaf->leaf.goal = minus_one;
      leaf->leaf.certs = std::move(vac.certs);
      leaf->leaf.vacuous = true;
      return leaf;
    }

    // Collapse hypotheses to linear facts until a fixpoint; the first
    // blocked atom contributes the split pair.
    std::vector<LinearConstraint> known = facts;
    std::vector<bool> done(hyps.size(), false);
    std::optional<Blocking> block;
    bool progress = true;
    while (progress) {
      progress = false;
      block.reset();
      for (size_t h = 0; h < hyps.size(); ++h) {
        if (done[h]) continue;
        auto res = collapse(hyps[h], known);
        if (auto* form = std::get_if<LinForm>(&res)) {
          known.push_back({*form, hyps[h].rel == Atom::Rel::EqZero ? LinRel::EqZero
                                                                   : LinRel::GeqZero});
          done[h] = true;
          progress = true;
        } else if (!block) {
          block = std::get<Blocking>(res);
        }
      }
    }

    std::optional<LinForm> goal_form;
    if (!block) {
      auto res = collapse(conclusion, known);
      if (auto* form = std::get_if<LinForm>(&res))
        goal_form = *form;
      else
        block = std::get<Blocking>(res);
    }

    if (block) {
      auto node = std::make_unique<ProofTree>();
      node->is_leaf = false;
      node->split_lhs = block->lhs;
      node->split_rhs = block->rhs;
      // Left branch: lhs <= rhs; right branch: rhs <= lhs.
      std::vector<LinearConstraint> left_facts = facts;
      left_facts.push_back({block->rhs - block->lhs, LinRel::GeqZero});
      SearchOutcome left = search(std::move(left_facts));
      if (std::holds_alternative<std::vector<Rational>>(left)) return left;
      std::vector<LinearConstraint> right_facts = facts;
      right_facts.push_back({block->lhs - block->rhs, LinRel::GeqZero});
      SearchOutcome right = search(std::move(right_facts));
      if (std::holds_alternative<std::vector<Rational>>(right)) return right;
      node->left = std::move(std::get<std::unique_ptr<ProofTree>>(left));
      node->right = std::move(std::get<std::unique_ptr<ProofTree>>(right));
      return node;
    }

    LinearConstraint goal{*goal_form, conclusion.rel == Atom::Rel::EqZero ? LinRel::EqZero
                                                                          : LinRel::GeqZero};
    EntailResult ent = linear_entailment(known, goal);
    if (ent.entailed) {
      auto leaf = std::make_unique<ProofTree>();
      leaf->is_leaf = true;
      leaf->leaf.system = std::move(known);
      leaf->leaf.goal = goal;
      leaf->leaf.certs = std::move(ent.certs);
      return leaf;
    }
    return ent.point;
  }
};

}  // namespace

ProverResult prove_lgroup_rule(const Rule& rule) {
  for (const Atom& a : rule.hypotheses) check_additive(a.term);
  check_additive(rule.conclusion.term);

  std::set<std::string> var_set;
  for (const Atom& a : rule.hypotheses)
    for (auto& v : term_variables(a.term)) var_set.insert(v);
  for (auto& v : term_variables(rule.conclusion.term)) var_set.insert(v);
  std::vector<std::string> vars(var_set.begin(), var_set.end());

  auto to_nf_atom = [&](const Atom& a) {
    SupInfNF nf = to_sup_inf_nf(a.term, vars);
    nf_absorb(nf);
    NfAtom out;
    out.rel = a.rel;
    for (const auto& fam : nf.families) {
      std::vector<LinForm> forms;
      forms.reserve(fam.size());
      for (const MultiPoly& p : fam) forms.push_back(to_linform(p, vars.size()));
      out.families.push_back(std::move(forms));
    }
    return out;
  };

  Prover prover{rule, vars, {}, to_nf_atom(rule.conclusion),
                LinearConstraint{LinForm(vars.size()), LinRel::GeqZero}};
  for (const Atom& a : rule.hypotheses) prover.hyps.push_back(to_nf_atom(a));
  LinForm m1(vars.size());
  m1.constant = Rational(-1);
  prover.minus_one = LinearConstraint{m1, LinRel::GeqZero};

  ProverResult result;
  result.variables = vars;
  std::set<std::vector<std::pair<std::vector<Rational>, Rational>>> distinct;
  auto count_forms = [&](const NfAtom& a) {
    for (const auto& fam : a.families)
      for (const LinForm& f : fam)
        distinct.insert({{f.coeffs, f.constant}});
  };
  for (const NfAtom& a : prover.hyps) count_forms(a);
  count_forms(prover.conclusion);
  result.distinct_forms = static_cast<int>(distinct.size());

  auto outcome = prover.search({});
  if (auto* tree = std::get_if<std::unique_ptr<ProofTree>>(&outcome)) {
    result.kind = ProverResult::Kind::Valid;
    result.tree = std::move(*tree);
    return result;
  }

  // Verify the counterexample against the original rule by exact
  // evaluation before reporting it.
  const std::vector<Rational>& point = std::get<std::vector<Rational>>(outcome);
  std::map<std::string, Rational> env;
  for (size_t k = 0; k < vars.size(); ++k) env[vars[k]] = point[k];
  for (const Atom& a : rule.hypotheses) {
    Rational v = eval_term(a.term, env);
    bool holds = a.rel == Atom::Rel::EqZero ? v.is_zero() : v.sign() >= 0;
    if (!holds) throw std::logic_error("prove_lgroup_rule: counterexample violates a hypothesis");
  }
  Rational cv = eval_term(rule.conclusion.term, env);
  bool concl_holds =
      rule.conclusion.rel == Atom::Rel::EqZero ? cv.is_zero() : cv.sign() >= 0;
  if (concl_holds)
    throw std::logic_error("prove_lgroup_rule: counterexample satisfies the conclusion");
  result.kind = ProverResult::Kind::Counterexample;
  result.counterexample = std::move(env);
  return result;
}

}  // namespace realalg
