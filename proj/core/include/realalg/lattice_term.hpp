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

#ifndef REALALG_LATTICE_TERM_H_
#define REALALG_LATTICE_TERM_H_

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "realalg/rational.hpp"

namespace realalg {

// Terms over the lattice-ordered ring signature (+, -, *, sup, inf) with
// rational constants, plus the derived sugar pos (t+ = t sup 0),
// neg (t- = (-t) sup 0) and abs. Immutable shared trees.
struct TermNode;
using Term = std::shared_ptr<const TermNode>;

struct TermNode {
  enum class Op { Const, Var, Neg, Add, Sub, Mul, Sup, Inf, Pos, NegPart, Abs };

  Op op;
  Rational value;     // Const
  std::string name;   // Var
  Term a, b;          // children
};

Term t_const(Rational c);
Term t_var(std::string name);
Term t_neg(Term a);
Term t_add(Term a, Term b);
Term t_sub(Term a, Term b);
Term t_mul(Term a, Term b);
Term t_sup(Term a, Term b);
Term t_inf(Term a, Term b);
Term t_pos(Term a);
Term t_negpart(Term a);
Term t_abs(Term a);

// Variable names occurring in t, sorted.
std::vector<std::string> term_variables(const Term& t);

// Exact evaluation with sup = max and inf = min over the rationals.
// Throws naming the variable if one is unbound.
Rational eval_term(const Term& t, const std::map<std::string, Rational>& point);

// Printer and parser round-trip. Grammar (loosest binding first):
//   sup:  t1 \/ t2      inf:  t1 /\ t2
//   sum:  t1 + t2, t1 - t2, unary -
//   prod: t1 * t2
//   atom: rational p/q, identifier, abs(t), pos(t), neg(t), (t)
std::string term_str(const Term& t);
Term parse_term(const std::string& text);

bool term_contains_mul(const Term& t);

}  // namespace realalg

#endif  // REALALG_LATTICE_TERM_H_
