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

#include "realalg/multipoly.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace realalg {

MultiPoly MultiPoly::constant(size_t nvars, const Rational& c) {
  MultiPoly p(nvars);
  p.add_term(std::vector<unsigned>(nvars, 0), c);
  return p;
}

MultiPoly MultiPoly::variable(size_t nvars, size_t index) {
  if (index >= nvars) throw std::out_of_range("MultiPoly::variable: index out of range");
  MultiPoly p(nvars);
  std::vector<unsigned> e(nvars, 0);
  e[index] = 1;
  p.add_term(e, Rational(1));
  return p;
}

bool MultiPoly::is_constant() const {
  if (terms_.empty()) return true;
  if (terms_.size() > 1) return false;
  const auto& e = terms_.begin()->first;
  return std::all_of(e.begin(), e.end(), [](unsigned k) { return k == 0; });
}

Rational MultiPoly::constant_value() const {
  if (terms_.empty()) return Rational(0);
  if (!is_constant()) throw std::logic_error("MultiPoly::constant_value: not constant");
  return terms_.begin()->second;
}

int MultiPoly::total_degree() const {
  int deg = -1;
  for (const auto& [e, c] : terms_) {
    (void)c;
    int d = std::accumulate(e.begin(), e.end(), 0);
    deg = std::max(deg, d);
  }
  return deg;
}

void MultiPoly::add_term(const std::vector<unsigned>& expo, const Rational& c) {
  if (expo.size() != nvars_) throw std::logic_error("MultiPoly::add_term: context size mismatch");
  if (c.is_zero()) return;
  auto it = terms_.find(expo);
  if (it == terms_.end()) {
    terms_.emplace(expo, c);
  } else {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

MultiPoly MultiPoly::operator-() const {
  MultiPoly r(nvars_);
  for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
  return r;
}

MultiPoly operator+(const MultiPoly& a, const MultiPoly& b) {
  if (a.nvars_ != b.nvars_) throw std::logic_error("MultiPoly: context size mismatch");
  MultiPoly r = a;
  for (const auto& [e, c] : b.terms_) r.add_term(e, c);
  return r;
}

MultiPoly operator-(const MultiPoly& a, const MultiPoly& b) { return a + (-b); }

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
  if (a.nvars_ != b.nvars_) throw std::logic_error("MultiPoly: context size mismatch");
  MultiPoly r(a.nvars_);
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      std::vector<unsigned> e(a.nvars_);
      for (size_t k = 0; k < a.nvars_; ++k) e[k] = ea[k] + eb[k];
      r.add_term(e, ca * cb);
    }
  }
  return r;
}

MultiPoly operator*(const Rational& c, const MultiPoly& p) {
  MultiPoly r(p.nvars_);
  if (c.is_zero()) return r;
  for (const auto& [e, pc] : p.terms_) r.terms_.emplace(e, c * pc);
  return r;
}

Rational MultiPoly::eval(const std::vector<Rational>& point) const {
  if (point.size() != nvars_) throw std::logic_error("MultiPoly::eval: point size mismatch");
  Rational acc = 0;
  for (const auto& [e, c] : terms_) {
    Rational t = c;
    for (size_t k = 0; k < nvars_; ++k)
      if (e[k] > 0) t *= rational_pow(point[k], e[k]);
    acc += t;
  }
  return acc;
}

int MultiPoly::compare(const MultiPoly& a, const MultiPoly& b) {
  int da = a.total_degree(), db = b.total_degree();
  if (da != db) return da < db ? -1 : 1;
  auto ia = a.terms_.begin(), ib = b.terms_.begin();
  for (; ia != a.terms_.end() && ib != b.terms_.end(); ++ia, ++ib) {
    if (ia->first != ib->first) return ia->first < ib->first ? -1 : 1;
    if (ia->second != ib->second) return ia->second < ib->second ? -1 : 1;
  }
  if (ia != a.terms_.end()) return 1;
  if (ib != b.terms_.end()) return -1;
  return 0;
}

UniPoly MultiPoly::to_unipoly(size_t var_index) const {
  std::vector<Rational> coeffs;
  for (const auto& [e, c] : terms_) {
    for (size_t k = 0; k < nvars_; ++k)
      if (k != var_index && e[k] != 0)
        throw std::logic_error("MultiPoly::to_unipoly: polynomial is not univariate");
    size_t deg = var_index < nvars_ ? e[var_index] : 0;
    if (coeffs.size() <= deg) coeffs.resize(deg + 1, Rational(0));
    coeffs[deg] = c;
  }
  return UniPoly(std::move(coeffs));
}

std::string MultiPoly::str(const std::vector<std::string>& var_names) const {
  if (terms_.empty()) return "0";
  if (var_names.size() != nvars_) throw std::logic_error("MultiPoly::str: name count mismatch");
  // Render highest-degree terms first for readability.
  std::vector<std::pair<std::vector<unsigned>, Rational>> ts(terms_.begin(), terms_.end());
  std::stable_sort(ts.begin(), ts.end(), [](const auto& x, const auto& y) {
    int dx = std::accumulate(x.first.begin(), x.first.end(), 0);
    int dy = std::accumulate(y.first.begin(), y.first.end(), 0);
    if (dx != dy) return dx > dy;
    return x.first > y.first;
  });
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : ts) {
    Rational a = c.abs();
    if (first) {
      if (c.sign() < 0) os << "-";
      first = false;
    } else {
      os << (c.sign() < 0 ? " - " : " + ");
    }
    bool monomial_empty = std::all_of(e.begin(), e.end(), [](unsigned k) { return k == 0; });
    bool coef_shown = monomial_empty || a != Rational(1);
    if (coef_shown) os << a.str();
    bool first_var = true;
    for (size_t k = 0; k < nvars_; ++k) {
      if (e[k] == 0) continue;
      if (!first_var || coef_shown) os << "*";
      os << var_names[k];
      if (e[k] > 1) os << "^" << e[k];
      first_var = false;
    }
  }
  return os.str();
}

}  // namespace realalg
