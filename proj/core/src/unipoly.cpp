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

#include "realalg/unipoly.hpp"

#include <cctype>
#include <sstream>
#include <stdexcept>

namespace realalg {

void UniPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

UniPoly::UniPoly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

UniPoly UniPoly::constant(const Rational& c) {
  UniPoly p;
  if (!c.is_zero()) p.coeffs_ = {c};
  return p;
}

UniPoly UniPoly::monomial(const Rational& c, size_t k) {
  UniPoly p;
  if (!c.is_zero()) {
    p.coeffs_.assign(k + 1, Rational(0));
    p.coeffs_[k] = c;
  }
  return p;
}

UniPoly UniPoly::variable() { return monomial(Rational(1), 1); }

Rational UniPoly::eval(const Rational& x) const {
  Rational acc = 0;
  for (size_t k = coeffs_.size(); k-- > 0;) acc = acc * x + coeffs_[k];
  return acc;
}

double UniPoly::eval_double(double x) const {
  double acc = 0;
  for (size_t k = coeffs_.size(); k-- > 0;) acc = acc * x + coeffs_[k].to_double();
  return acc;
}

UniPoly UniPoly::derivative() const {
  if (coeffs_.size() <= 1) return UniPoly();
  std::vector<Rational> d(coeffs_.size() - 1);
  for (size_t k = 1; k < coeffs_.size(); ++k) d[k - 1] = Rational(Int(k)) * coeffs_[k];
  return UniPoly(std::move(d));
}

UniPoly UniPoly::operator-() const {
  UniPoly r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

UniPoly operator+(const UniPoly& a, const UniPoly& b) {
  std::vector<Rational> c(std::max(a.coeffs_.size(), b.coeffs_.size()), Rational(0));
  for (size_t k = 0; k < c.size(); ++k) c[k] = a.coeff(k) + b.coeff(k);
  return UniPoly(std::move(c));
}

UniPoly operator-(const UniPoly& a, const UniPoly& b) { return a + (-b); }

UniPoly operator*(const UniPoly& a, const UniPoly& b) {
  if (a.is_zero() || b.is_zero()) return UniPoly();
  std::vector<Rational> c(a.coeffs_.size() + b.coeffs_.size() - 1, Rational(0));
  for (size_t i = 0; i < a.coeffs_.size(); ++i)
    for (size_t j = 0; j < b.coeffs_.size(); ++j) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
  return UniPoly(std::move(c));
}

UniPoly operator*(const Rational& c, const UniPoly& p) {
  if (c.is_zero()) return UniPoly();
  UniPoly r = p;
  for (auto& ck : r.coeffs_) ck *= c;
  return r;
}

std::pair<UniPoly, UniPoly> UniPoly::divmod(const UniPoly& d) const {
  if (d.is_zero()) throw std::domain_error("UniPoly::divmod: division by zero polynomial");
  UniPoly r = *this;
  if (r.degree() < d.degree()) return {UniPoly(), r};
  std::vector<Rational> q(r.degree() - d.degree() + 1, Rational(0));
  const Rational lead = d.leading();
  while (!r.is_zero() && r.degree() >= d.degree()) {
    size_t shift = r.degree() - d.degree();
    Rational c = r.leading() / lead;
    q[shift] = c;
    r = r - UniPoly::monomial(c, shift) * d;
  }
  return {UniPoly(std::move(q)), r};
}

UniPoly UniPoly::monic() const {
  if (is_zero()) throw std::domain_error("UniPoly::monic: zero polynomial");
  return (Rational(1) / leading()) * *this;
}

UniPoly UniPoly::compose_scale(const Rational& c) const {
  // p(x/c) * c^deg; well defined for c != 0.
  if (c.is_zero()) throw std::domain_error("UniPoly::compose_scale: c = 0");
  std::vector<Rational> r(coeffs_.size());
  const size_t d = coeffs_.empty() ? 0 : coeffs_.size() - 1;
  for (size_t k = 0; k < coeffs_.size(); ++k) r[k] = coeffs_[k] * rational_pow(c, d - k);
  return UniPoly(std::move(r));
}

UniPoly UniPoly::reflect() const {
  std::vector<Rational> r(coeffs_.size());
  for (size_t k = 0; k < coeffs_.size(); ++k) r[k] = (k % 2 == 0) ? coeffs_[k] : -coeffs_[k];
  return UniPoly(std::move(r));
}

std::string UniPoly::str(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (size_t k = coeffs_.size(); k-- > 0;) {
    const Rational& c = coeffs_[k];
    if (c.is_zero()) continue;
    Rational a = c.abs();
    if (first) {
      if (c.sign() < 0) os << "-";
      first = false;
    } else {
      os << (c.sign() < 0 ? " - " : " + ");
    }
    if (k == 0) {
      os << a.str();
    } else {
      if (a != Rational(1)) os << a.str() << "*";
      os << var;
      if (k > 1) os << "^" << k;
    }
  }
  return os.str();
}

namespace {

struct PolyParser {
  const std::string& s;
  const std::string& var;
  size_t i = 0;

  void skip() {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  }

  [[noreturn]] void fail(const std::string& what) {
    throw std::invalid_argument("polynomial parse error at position " + std::to_string(i) + ": " +
                                what + " in '" + s + "'");
  }

  bool eat(char c) {
    skip();
    if (i < s.size() && s[i] == c) {
      ++i;
      return true;
    }
    return false;
  }

  Int read_uint() {
    skip();
    if (i >= s.size() || !std::isdigit(static_cast<unsigned char>(s[i]))) fail("expected digits");
    Int v = 0;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
      v = v * 10 + (s[i] - '0');
      ++i;
    }
    return v;
  }

  bool at_var() {
    skip();
    if (i + var.size() > s.size()) return false;
    if (s.compare(i, var.size(), var) != 0) return false;
    size_t j = i + var.size();
    // Reject identifiers that merely start with the variable name.
    return j >= s.size() || !(std::isalnum(static_cast<unsigned char>(s[j])) || s[j] == '_');
  }

  // term := coef ('*' var pow)? | var pow
  UniPoly read_term() {
    skip();
    Rational coef = 1;
    bool have_coef = false;
    if (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
      Int num = read_uint();
      Int den = 1;
      if (eat('/')) den = read_uint();
      coef = Rational(num, den);
      have_coef = true;
    }
    size_t power = 0;
    bool have_var = false;
    if (!have_coef || eat('*')) {
      if (!at_var()) {
        if (have_coef) fail("expected variable after '*'");
        fail("expected coefficient or variable");
      }
      i += var.size();
      have_var = true;
      power = eat('^') ? read_uint().convert_to<size_t>() : 1;
    }
    (void)have_var;
    return UniPoly::monomial(coef, power);
  }

  UniPoly parse() {
    UniPoly acc;
    skip();
    bool neg = eat('-');
    if (!neg) eat('+');
    for (;;) {
      UniPoly t = read_term();
      acc = neg ? acc - t : acc + t;
      skip();
      if (i >= s.size()) break;
      if (eat('+')) {
        neg = false;
      } else if (eat('-')) {
        neg = true;
      } else {
        fail("expected '+' or '-'");
      }
    }
    return acc;
  }
};

}  // namespace

UniPoly UniPoly::parse(const std::string& text, const std::string& var) {
  PolyParser p{text, var};
  return p.parse();
}

MonicPoly::MonicPoly(UniPoly p) : p_(std::move(p)) {
  if (p_.degree() < 1) throw std::domain_error("MonicPoly: degree must be >= 1");
  if (!p_.is_monic()) throw std::domain_error("MonicPoly: leading coefficient must be 1");
}

MonicPoly normalized_derivative(const MonicPoly& f, unsigned k) {
  if (static_cast<int>(k) >= f.degree())
    throw std::domain_error("normalized_derivative: k must satisfy k < deg(f)");
  UniPoly d = f.poly();
  for (unsigned j = 0; j < k; ++j) d = d.derivative();
  return MonicPoly(d.monic());
}

UniPoly poly_gcd(UniPoly a, UniPoly b) {
  if (a.is_zero()) return b.is_zero() ? b : b.monic();
  if (b.is_zero()) return a.monic();
  a = a.monic();
  b = b.monic();
  while (!b.is_zero()) {
    UniPoly r = a.divmod(b).second;
    a = b;
    b = r.is_zero() ? r : r.monic();
  }
  return a;
}

UniPoly squarefree_part(const UniPoly& f) {
  if (f.is_zero()) throw std::domain_error("squarefree_part: zero polynomial");
  if (f.degree() == 0) return UniPoly::constant(1);
  UniPoly g = poly_gcd(f, f.derivative());
  return f.divmod(g).first.monic();
}

Rational cauchy_root_bound(const UniPoly& f) {
  if (f.is_zero()) throw std::domain_error("cauchy_root_bound: zero polynomial");
  Rational lead = f.leading();
  Rational m = 1;
  for (int k = 0; k < f.degree(); ++k) m = max(m, (f.coeff(k) / lead).abs());
  return Rational(1) + m;
}

SturmSequence::SturmSequence(const UniPoly& f) {
  UniPoly p0 = squarefree_part(f);
  seq_.push_back(p0);
  UniPoly p1 = p0.derivative();
  while (!p1.is_zero()) {
    seq_.push_back(p1);
    UniPoly r = -(p0.divmod(p1).second);
    p0 = p1;
    // Normalize by a positive constant only; signs carry the information.
    p1 = r.is_zero() ? r : (Rational(1) / r.leading().abs()) * r;
  }
}

int SturmSequence::variations(const Rational& x) const {
  int var = 0, prev = 0;
  for (const UniPoly& p : seq_) {
    int s = p.eval(x).sign();
    if (s == 0) continue;
    if (prev != 0 && s != prev) ++var;
    prev = s;
  }
  return var;
}

int sturm_count(const UniPoly& f, const Rational& a, const Rational& b) {
  if (a >= b) return 0;
  SturmSequence seq(f);
  return seq.count(a, b);
}

namespace {

// Determinant by exact fraction-based Gaussian elimination.
Rational determinant(std::vector<std::vector<Rational>> m) {
  const size_t n = m.size();
  Rational det = 1;
  for (size_t col = 0; col < n; ++col) {
    size_t pivot = col;
    while (pivot < n && m[pivot][col].is_zero()) ++pivot;
    if (pivot == n) return Rational(0);
    if (pivot != col) {
      std::swap(m[pivot], m[col]);
      det = -det;
    }
    det *= m[col][col];
    Rational inv = Rational(1) / m[col][col];
    for (size_t r = col + 1; r < n; ++r) {
      if (m[r][col].is_zero()) continue;
      Rational factor = m[r][col] * inv;
      for (size_t c = col; c < n; ++c) m[r][c] -= factor * m[col][c];
    }
  }
  return det;
}

Rational sylvester_resultant(const UniPoly& p, const UniPoly& q) {
  const int dp = p.degree(), dq = q.degree();
  if (dp < 0 || dq < 0) return Rational(0);
  if (dp == 0) return rational_pow(p.coeff(0), dq);
  if (dq == 0) return rational_pow(q.coeff(0), dp);
  const size_t n = static_cast<size_t>(dp + dq);
  std::vector<std::vector<Rational>> m(n, std::vector<Rational>(n, Rational(0)));
  for (int row = 0; row < dq; ++row)
    for (int k = 0; k <= dp; ++k) m[row][row + k] = p.coeff(dp - k);
  for (int row = 0; row < dp; ++row)
    for (int k = 0; k <= dq; ++k) m[dq + row][row + k] = q.coeff(dq - k);
  return determinant(std::move(m));
}

}  // namespace

UniPoly image_resultant(const UniPoly& p, const UniPoly& f) {
  if (p.degree() < 1) throw std::domain_error("image_resultant: p must have degree >= 1");
  const int dy = p.degree();
  // Interpolate y -> Res_x(p, y - f) at dy + 1 sample points.
  std::vector<Rational> xs(dy + 1), ys(dy + 1);
  for (int k = 0; k <= dy; ++k) {
    xs[k] = Rational(k);
    ys[k] = sylvester_resultant(p, UniPoly::constant(xs[k]) - f);
  }
  // Lagrange interpolation.
  UniPoly acc;
  for (int k = 0; k <= dy; ++k) {
    UniPoly basis = UniPoly::constant(1);
    Rational denom = 1;
    for (int j = 0; j <= dy; ++j) {
      if (j == k) continue;
      basis = basis * (UniPoly::variable() - UniPoly::constant(xs[j]));
      denom *= xs[k] - xs[j];
    }
    acc = acc + (ys[k] / denom) * basis;
  }
  return acc;
}

}  // namespace realalg
