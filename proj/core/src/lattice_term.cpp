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

#include "realalg/lattice_term.hpp"

#include <cctype>
#include <set>
#include <sstream>
#include <stdexcept>

namespace realalg {

namespace {
Term make(TermNode n) { return std::make_shared<const TermNode>(std::move(n)); }
using Op = TermNode::Op;
}  // namespace

Term t_const(Rational c) { return make({Op::Const, std::move(c), "", nullptr, nullptr}); }
Term t_var(std::string name) { return make({Op::Var, Rational(0), std::move(name), nullptr, nullptr}); }
Term t_neg(Term a) { return make({Op::Neg, Rational(0), "", std::move(a), nullptr}); }
Term t_add(Term a, Term b) { return make({Op::Add, Rational(0), "", std::move(a), std::move(b)}); }
Term t_sub(Term a, Term b) { return make({Op::Sub, Rational(0), "", std::move(a), std::move(b)}); }
Term t_mul(Term a, Term b) { return make({Op::Mul, Rational(0), "", std::move(a), std::move(b)}); }
Term t_sup(Term a, Term b) { return make({Op::Sup, Rational(0), "", std::move(a), std::move(b)}); }
Term t_inf(Term a, Term b) { return make({Op::Inf, Rational(0), "", std::move(a), std::move(b)}); }
Term t_pos(Term a) { return make({Op::Pos, Rational(0), "", std::move(a), nullptr}); }
Term t_negpart(Term a) { return make({Op::NegPart, Rational(0), "", std::move(a), nullptr}); }
Term t_abs(Term a) { return make({Op::Abs, Rational(0), "", std::move(a), nullptr}); }

namespace {

void collect_vars(const Term& t, std::set<std::string>& out) {
  if (!t) return;
  if (t->op == Op::Var) out.insert(t->name);
  collect_vars(t->a, out);
  collect_vars(t->b, out);
}

}  // namespace

std::vector<std::string> term_variables(const Term& t) {
  std::set<std::string> vars;
  collect_vars(t, vars);
  return {vars.begin(), vars.end()};
}

Rational eval_term(const Term& t, const std::map<std::string, Rational>& point) {
  switch (t->op) {
    case Op::Const:
      return t->value;
    case Op::Var: {
      auto it = point.find(t->name);
      if (it == point.end())
        throw std::domain_error("eval_term: unbound variable '" + t->name + "'");
      return it->second;
    }
    case Op::Neg:
      return -eval_term(t->a, point);
    case Op::Add:
      return eval_term(t->a, point) + eval_term(t->b, point);
    case Op::Sub:
      return eval_term(t->a, point) - eval_term(t->b, point);
    case Op::Mul:
      return eval_term(t->a, point) * eval_term(t->b, point);
    case Op::Sup:
      return max(eval_term(t->a, point), eval_term(t->b, point));
    case Op::Inf:
      return min(eval_term(t->a, point), eval_term(t->b, point));
    case Op::Pos:
      return max(eval_term(t->a, point), Rational(0));
    case Op::NegPart:
      return max(-eval_term(t->a, point), Rational(0));
    case Op::Abs:
      return eval_term(t->a, point).abs();
  }
  throw std::logic_error("eval_term: unknown node");
}

bool term_contains_mul(const Term& t) {
  if (!t) return false;
  if (t->op == Op::Mul) return true;
  return term_contains_mul(t->a) || term_contains_mul(t->b);
}

namespace {

// Precedence levels: 0 sup, 1 inf, 2 sum, 3 product, 4 atom.
int precedence(const TermNode& n) {
  switch (n.op) {
    case Op::Sup:
      return 0;
    case Op::Inf:
      return 1;
    case Op::Add:
    case Op::Sub:
    case Op::Neg:
      return 2;
    case Op::Mul:
      return 3;
    case Op::Const:
      return n.value.sign() < 0 ? 2 : 4;
    default:
      return 4;
  }
}

void print(const Term& t, int parent_level, std::ostream& os) {
  const int level = precedence(*t);
  const bool parens = level < parent_level;
  if (parens) os << "(";
  switch (t->op) {
    case Op::Const:
      os << t->value.str();
      break;
    case Op::Var:
      os << t->name;
      break;
    case Op::Neg:
      os << "-";
      print(t->a, 3, os);
      break;
    case Op::Add:
      print(t->a, 2, os);
      os << " + ";
      print(t->b, 3, os);
      break;
    case Op::Sub:
      print(t->a, 2, os);
      os << " - ";
      print(t->b, 3, os);
      break;
    case Op::Mul:
      print(t->a, 3, os);
      os << "*";
      print(t->b, 4, os);
      break;
    case Op::Sup:
      print(t->a, 0, os);
      os << " \\/ ";
      print(t->b, 1, os);
      break;
    case Op::Inf:
      print(t->a, 1, os);
      os << " /\\ ";
      print(t->b, 2, os);
      break;
    case Op::Pos:
      os << "pos(";
      print(t->a, 0, os);
      os << ")";
      break;
    case Op::NegPart:
      os << "neg(";
      print(t->a, 0, os);
      os << ")";
      break;
    case Op::Abs:
      os << "abs(";
      print(t->a, 0, os);
      os << ")";
      break;
  }
  if (parens) os << ")";
}

struct TermParser {
  const std::string& s;
  size_t i = 0;

  [[noreturn]] void fail(const std::string& expected) {
    throw std::invalid_argument("term parse error at position " + std::to_string(i) +
                                ": expected " + expected + " in '" + s + "'");
  }

  void skip() {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  }

  bool lookahead(const std::string& tok) {
    skip();
    return s.compare(i, tok.size(), tok) == 0;
  }

  bool eat(const std::string& tok) {
    if (!lookahead(tok)) return false;
    i += tok.size();
    return true;
  }

  Int read_uint() {
    skip();
    if (i >= s.size() || !std::isdigit(static_cast<unsigned char>(s[i]))) fail("digits");
    Int v = 0;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
      v = v * 10 + (s[i] - '0');
      ++i;
    }
    return v;
  }

  std::string read_ident() {
    skip();
    if (i >= s.size() ||
        !(std::isalpha(static_cast<unsigned char>(s[i])) || s[i] == '_'))
      fail("identifier");
    size_t start = i;
    while (i < s.size() && (std::isalnum(static_cast<unsigned char>(s[i])) || s[i] == '_' ||
                            s[i] == '\''))
      ++i;
    return s.substr(start, i - start);
  }

  Term parse_atom() {
    skip();
    if (i >= s.size()) fail("a term");
    if (eat("(")) {
      Term t = parse_sup();
      if (!eat(")")) fail("')'");
      return t;
    }
    if (std::isdigit(static_cast<unsigned char>(s[i]))) {
      Int num = read_uint();
      // A '/' marks a rational constant unless it begins the inf token "/\".
      skip();
      if (i < s.size() && s[i] == '/' && !(i + 1 < s.size() && s[i + 1] == '\\')) {
        ++i;
        Int den = read_uint();
        return t_const(Rational(num, den));
      }
      return t_const(Rational(num));
    }
    std::string id = read_ident();
    if (lookahead("(")) {
      if (id != "abs" && id != "pos" && id != "neg") fail("abs(, pos( or neg(");
      eat("(");
      Term arg = parse_sup();
      if (!eat(")")) fail("')'");
      if (id == "abs") return t_abs(arg);
      if (id == "pos") return t_pos(arg);
      return t_negpart(arg);
    }
    return t_var(id);
  }

  Term parse_prod() {
    Term t = parse_atom();
    while (eat("*")) t = t_mul(t, parse_atom());
    return t;
  }

  Term parse_sum() {
    skip();
    Term t;
    if (eat("-"))
      t = t_neg(parse_prod());
    else {
      eat("+");
      t = parse_prod();
    }
    for (;;) {
      if (lookahead("+")) {
        eat("+");
        t = t_add(t, parse_prod());
      } else if (lookahead("-")) {
        eat("-");
        t = t_sub(t, parse_prod());
      } else {
        return t;
      }
    }
  }

  Term parse_inf() {
    Term t = parse_sum();
    while (eat("/\\")) t = t_inf(t, parse_sum());
    return t;
  }

  Term parse_sup() {
    Term t = parse_inf();
    while (eat("\\/")) t = t_sup(t, parse_inf());
    return t;
  }

  Term parse() {
    Term t = parse_sup();
    skip();
    if (i != s.size()) fail("end of input");
    return t;
  }
};

}  // namespace

std::string term_str(const Term& t) {
  std::ostringstream os;
  print(t, 0, os);
  return os.str();
}

Term parse_term(const std::string& text) {
  TermParser p{text};
  return p.parse();
}

}  // namespace realalg
