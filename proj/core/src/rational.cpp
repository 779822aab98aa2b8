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

#include "realalg/rational.hpp"

#include <cctype>
#include <ostream>
#include <stdexcept>

namespace realalg {

Rational::Rational(const Int& num, const Int& den) {
  if (den.is_zero()) throw std::domain_error("Rational: zero denominator");
  if (den.sign() < 0)
    v_ = boost::multiprecision::cpp_rational(-num, -den);
  else
    v_ = boost::multiprecision::cpp_rational(num, den);
}

Rational Rational::operator-() const {
  Rational r;
  r.v_ = -v_;
  return r;
}

Rational& Rational::operator+=(const Rational& o) {
  v_ += o.v_;
  return *this;
}

Rational& Rational::operator-=(const Rational& o) {
  v_ -= o.v_;
  return *this;
}

Rational& Rational::operator*=(const Rational& o) {
  v_ *= o.v_;
  return *this;
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw std::domain_error("Rational: division by zero");
  v_ /= o.v_;
  return *this;
}

Rational Rational::parse(const std::string& text) {
  size_t i = 0, n = text.size();
  auto skip_ws = [&] { while (i < n && std::isspace(static_cast<unsigned char>(text[i]))) ++i; };
  auto read_int = [&](bool sign_ok) -> Int {
    skip_ws();
    bool neg = false;
    if (sign_ok && i < n && (text[i] == '+' || text[i] == '-')) {
      neg = text[i] == '-';
      ++i;
      skip_ws();
    }
    if (i >= n || !std::isdigit(static_cast<unsigned char>(text[i])))
      throw std::invalid_argument("Rational::parse: expected digits in '" + text + "'");
    Int v = 0;
    while (i < n && std::isdigit(static_cast<unsigned char>(text[i]))) {
      v = v * 10 + (text[i] - '0');
      ++i;
    }
    return neg ? Int(-v) : v;
  };
  Int num = read_int(true);
  Int den = 1;
  skip_ws();
  if (i < n && text[i] == '/') {
    ++i;
    den = read_int(true);
  }
  skip_ws();
  if (i != n) throw std::invalid_argument("Rational::parse: trailing characters in '" + text + "'");
  return Rational(num, den);
}

std::string Rational::str() const {
  std::string s = num().str();
  if (!is_integer()) {
    s += "/";
    s += den().str();
  }
  return s;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

Int rational_floor(const Rational& r) {
  Int q = r.num() / r.den();
  if (r.sign() < 0 && q * r.den() != r.num()) --q;
  return q;
}

Int rational_ceil(const Rational& r) {
  Int q = r.num() / r.den();
  if (r.sign() > 0 && q * r.den() != r.num()) ++q;
  return q;
}

Rational rational_pow(const Rational& r, unsigned k) {
  Rational acc = 1, base = r;
  while (k > 0) {
    if (k & 1u) acc *= base;
    base *= base;
    k >>= 1u;
  }
  return acc;
}

Rational min(const Rational& a, const Rational& b) { return a <= b ? a : b; }
Rational max(const Rational& a, const Rational& b) { return a >= b ? a : b; }

}  // namespace realalg
