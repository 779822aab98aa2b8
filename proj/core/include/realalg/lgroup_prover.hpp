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

#ifndef REALALG_LGROUP_PROVER_H_
#define REALALG_LGROUP_PROVER_H_

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "realalg/lattice_term.hpp"
#include "realalg/linear_entail.hpp"

namespace realalg {

// Atomic formula of the additive lattice fragment: term = 0 or term >= 0.
// Terms may use constants, variables, negation, addition, scalar multiples
// and sup/inf (with the pos/neg/abs sugar) but no product of two
// non-constant terms.
struct Atom {
  Term term;
  enum class Rel { EqZero, GeqZero } rel = Rel::GeqZero;

  std::string str() const;
};

// Algebraic rule: hypotheses entail one atomic conclusion.
struct Rule {
  std::vector<Atom> hypotheses;
  Atom conclusion;

  std::string str() const;
};

// Parses "H1, H2, ... |- C" where each atom is one of
//   t = 0, t >= 0, t <= 0, t1 = t2, t1 >= t2, t1 <= t2
// over the shared term grammar. Hypotheses may be empty ("|- C").
Rule parse_rule(const std::string& text);

// Branch-on-sign proof tree. A split opens the branches lhs <= rhs and
// lhs >= rhs for two linear forms; a leaf certifies its collapsed linear
// sequent with Farkas multipliers.
struct ProofTree {
  struct Leaf {
    std::vector<LinearConstraint> system;  // split facts + collapsed hypotheses
    LinearConstraint goal;                 // collapsed conclusion
    std::vector<FarkasCertificate> certs;
    bool vacuous = false;  // the system itself is contradictory
  };

  bool is_leaf = false;
  Leaf leaf;
  LinForm split_lhs, split_rhs;
  std::unique_ptr<ProofTree> left, right;

  int leaves() const;
  int splits() const;
  int depth() const;
};

struct ProverResult {
  enum class Kind { Valid, Counterexample } kind = Kind::Valid;
  std::unique_ptr<ProofTree> tree;               // Valid
  std::map<std::string, Rational> counterexample;  // Counterexample
  std::vector<std::string> variables;
  int distinct_forms = 0;  // distinct linear forms across all normal forms
};

// Decides an algebraic rule of the theory of lattice-ordered abelian
// groups: normalizes every atom to a sup-inf of linear forms, splits on
// the sign of differences of the forms until every sup/inf collapses, and
// decides each leaf by exact linear entailment. A failing leaf yields a
// rational counterexample, verified against the original rule by exact
// evaluation before it is returned. Throws on multiplicative terms.
ProverResult prove_lgroup_rule(const Rule& rule);

}  // namespace realalg

#endif  // REALALG_LGROUP_PROVER_H_
