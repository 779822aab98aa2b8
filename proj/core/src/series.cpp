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

#include "realalg/series.hpp"

#include <cctype>
#include <mutex>
#include <optional>
#include <sstream>
#include <stdexcept>

#include "realalg/unipoly.hpp"

namespace realalg {

struct LazySeries::Impl {
  mutable std::recursive_mutex mu;
  mutable std::vector<Rational> coeffs;
  mutable std::vector<int> kappa;
  Rule rule;
};

Rational LazySeries::SelfView::coeff(size_t j) const {
  const Impl* impl = static_cast<const Impl*>(impl_);
  if (j >= impl->coeffs.size())
    throw std::logic_error(
        "LazySeries: a coefficient rule may only read strictly earlier coefficients");
  return impl->coeffs[j];
}

LazySeries::LazySeries() : impl_(std::make_shared<Impl>()) {
  impl_->rule = [](size_t, const SelfView&) { return Rational(0); };
}

LazySeries LazySeries::from_rule(Rule rule) {
  LazySeries s;
  s.impl_->rule = std::move(rule);
  return s;
}

LazySeries LazySeries::constant(const Rational& c) { return from_coeffs({c}); }

LazySeries LazySeries::epsilon() { return from_coeffs({Rational(0), Rational(1)}); }

LazySeries LazySeries::from_coeffs(std::vector<Rational> coeffs) {
  return from_rule([v = std::move(coeffs)](size_t k, const SelfView&) {
    return k < v.size() ? v[k] : Rational(0);
  });
}

LazySeries LazySeries::geometric() {
  return from_rule([](size_t, const SelfView&) { return Rational(1); });
}

Rational LazySeries::coeff(size_t k) const {
  std::lock_guard<std::recursive_mutex> lock(impl_->mu);
  while (impl_->coeffs.size() <= k) {
    size_t idx = impl_->coeffs.size();
    Rational c = impl_->rule(idx, SelfView(impl_.get()));
    int prev = impl_->kappa.empty() ? 0 : impl_->kappa.back();
    impl_->coeffs.push_back(std::move(c));
    impl_->kappa.push_back(prev != 0 ? prev : impl_->coeffs.back().sign());
  }
  return impl_->coeffs[k];
}

int LazySeries::sign_potential(size_t k) const {
  coeff(k);
  std::lock_guard<std::recursive_mutex> lock(impl_->mu);
  return impl_->kappa[k];
}

std::vector<Rational> LazySeries::prefix(size_t count) const {
  std::vector<Rational> out;
  out.reserve(count);
  for (size_t k = 0; k < count; ++k) out.push_back(coeff(k));
  return out;
}

LazySeries operator+(const LazySeries& a, const LazySeries& b) {
  return LazySeries::from_rule([a, b](size_t k, const LazySeries::SelfView&) {
    return a.coeff(k) + b.coeff(k);
  });
}

LazySeries operator-(const LazySeries& a, const LazySeries& b) {
  return LazySeries::from_rule([a, b](size_t k, const LazySeries::SelfView&) {
    return a.coeff(k) - b.coeff(k);
  });
}

LazySeries LazySeries::operator-() const {
  LazySeries a = *this;
  return from_rule([a](size_t k, const SelfView&) { return -a.coeff(k); });
}

LazySeries operator*(const Rational& c, const LazySeries& s) {
  return LazySeries::from_rule([c, s](size_t k, const LazySeries::SelfView&) {
    return c * s.coeff(k);
  });
}

LazySeries operator*(const LazySeries& a, const LazySeries& b) {
  return LazySeries::from_rule([a, b](size_t k, const LazySeries::SelfView&) {
    Rational acc = 0;
    for (size_t j = 0; j <= k; ++j) acc += a.coeff(j) * b.coeff(k - j);
    return acc;
  });
}

LazySeries LazySeries::shift_up(size_t m) const {
  LazySeries body = *this;
  return from_rule([body, m](size_t k, const SelfView&) {
    return k < m ? Rational(0) : body.coeff(k - m);
  });
}

std::string LazySeries::pretty(size_t count) const {
  std::ostringstream os;
  bool first = true;
  for (size_t k = 0; k < count; ++k) {
    Rational c = coeff(k);
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
      os << "e";
      if (k > 1) os << "^" << k;
    }
  }
  if (first) return "0";
  return os.str();
}

LazySeries series_abs(const LazySeries& xi) {
  return LazySeries::from_rule([xi](size_t k, const LazySeries::SelfView&) {
    return Rational(xi.sign_potential(k)) * xi.coeff(k);
  });
}

LazySeries series_sup(const LazySeries& a, const LazySeries& b) {
  return Rational(1, 2) * (a + b + series_abs(a - b));
}

LazySeries series_inf(const LazySeries& a, const LazySeries& b) {
  return Rational(1, 2) * (a + b - series_abs(a - b));
}

LazySeries series_inverse(const LazySeries& xi) {
  Rational c0 = xi.coeff(0);
  if (c0.is_zero())
    throw std::domain_error("series_inverse: kappa_0 = 0, no depth-0 unit witness");
  Rational inv0 = Rational(1) / c0;
  return LazySeries::from_rule([xi, inv0](size_t k, const LazySeries::SelfView& self) {
    if (k == 0) return inv0;
    Rational acc = 0;
    for (size_t j = 1; j <= k; ++j) acc += xi.coeff(j) * self.coeff(k - j);
    return -inv0 * acc;
  });
}

FracResult series_frac(const LazySeries& xi, const LazySeries& zeta, size_t fuel) {
  LazySeries slack = zeta - xi;
  std::optional<size_t> valuation;
  for (size_t k = 0; k <= fuel; ++k) {
    if (xi.sign_potential(k) < 0)
      throw std::domain_error("series_frac: 0 <= xi violated at depth " + std::to_string(k));
    if (slack.sign_potential(k) < 0)
      throw std::domain_error("series_frac: xi <= zeta violated at depth " + std::to_string(k));
    int kz = zeta.sign_potential(k);
    if (kz < 0)
      throw std::domain_error("series_frac: 0 <= zeta violated at depth " + std::to_string(k));
    if (kz > 0 && !valuation) valuation = k;
  }
  if (!valuation) {
    FracResult out;
    out.resolved = false;
    out.prefix.assign(fuel + 1, Rational(0));
    return out;
  }
  // v(zeta) = k0: write zeta = z e^k0 (1 + e alpha) and xi = e^k0 beta;
  // then rho = z^{-1} beta^2 e^k0 (1 + e alpha)^{-1}.
  const size_t k0 = *valuation;
  Rational z = zeta.coeff(k0);
  LazySeries unit = LazySeries::from_rule([zeta, k0, z](size_t m, const LazySeries::SelfView&) {
    return zeta.coeff(k0 + m) / z;
  });
  LazySeries beta = LazySeries::from_rule([xi, k0](size_t m, const LazySeries::SelfView&) {
    return xi.coeff(k0 + m);
  });
  FracResult out;
  out.resolved = true;
  out.rho = ((Rational(1) / z) * (beta * beta * series_inverse(unit))).shift_up(k0);
  return out;
}

OtfSplit series_otf_split(const LazySeries& xi, const LazySeries& zeta, size_t k) {
  LazySeries sum = xi + zeta;
  if (sum.sign_potential(k) != 1) return OtfSplit::Unknown;
  size_t first = 0;
  while (sum.coeff(first).is_zero()) ++first;  // exists: kappa_k = 1
  // The sum's first nonzero coefficient is positive; whichever summand is
  // not yet negative at that depth carries the positivity witness.
  return xi.sign_potential(first) == 1 ? OtfSplit::Left : OtfSplit::Right;
}

LazySeries SeriesPoly::eval(const LazySeries& x) const {
  if (coeffs.empty()) return LazySeries();
  LazySeries acc = coeffs.back();
  for (size_t i = coeffs.size() - 1; i-- > 0;) acc = acc * x + coeffs[i];
  return acc;
}

SeriesPoly SeriesPoly::derivative() const {
  SeriesPoly d;
  for (size_t i = 1; i < coeffs.size(); ++i) d.coeffs.push_back(Rational(Int(i)) * coeffs[i]);
  return d;
}

namespace {

// Truncated product of coefficient vectors (both of length n, result n).
std::vector<Rational> mul_trunc(const std::vector<Rational>& a, const std::vector<Rational>& b) {
  std::vector<Rational> out(a.size(), Rational(0));
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i].is_zero()) continue;
    for (size_t j = 0; i + j < a.size(); ++j) out[i + j] += a[i] * b[j];
  }
  return out;
}

}  // namespace

LazySeries hensel_newton_root(const SeriesPoly& p) {
  if (p.coeffs.size() < 2)
    throw std::domain_error("hensel_newton_root: polynomial must have degree >= 1");
  if (!p.coeffs[0].coeff(0).is_zero())
    throw std::domain_error("hensel_newton_root: v(P(0)) > 0 witness missing (c_0(P(0)) != 0)");
  Rational d0 = p.coeffs[1].coeff(0);
  if (d0.is_zero())
    throw std::domain_error("hensel_newton_root: v(P'(0)) = 0 witness missing (c_0(P'(0)) = 0)");
  Rational inv = Rational(1) / d0;
  SeriesPoly poly = p;
  return LazySeries::from_rule([poly, inv](size_t k, const LazySeries::SelfView& self) {
    if (k == 0) return Rational(0);
    // Coefficient k of P(xhat) with xhat the already-known truncation;
    // x_k then cancels it against c_0(P'(0)).
    std::vector<Rational> xhat(k + 1, Rational(0));
    for (size_t j = 1; j < k; ++j) xhat[j] = self.coeff(j);
    std::vector<Rational> acc(k + 1, Rational(0));
    for (size_t i = poly.coeffs.size(); i-- > 0;) {
      acc = mul_trunc(acc, xhat);
      for (size_t m = 0; m <= k; ++m) acc[m] += poly.coeffs[i].coeff(m);
    }
    return -inv * acc[k];
  });
}

Rational LaurentElement::coeff(long k) const {
  if (k < shift) return Rational(0);
  return body.coeff(static_cast<size_t>(k - shift));
}

int LaurentElement::sign_potential(long k) const {
  if (k < shift) return 0;
  return body.sign_potential(static_cast<size_t>(k - shift));
}

bool laurent_eq_upto(const LaurentElement& a, const LaurentElement& b, size_t fuel) {
  const LaurentElement& lo = a.shift <= b.shift ? a : b;
  const LaurentElement& hi = a.shift <= b.shift ? b : a;
  size_t d = static_cast<size_t>(hi.shift - lo.shift);
  LazySeries shifted = hi.body.shift_up(d);
  for (size_t k = 0; k <= fuel; ++k)
    if (lo.body.coeff(k) != shifted.coeff(k)) return false;
  return true;
}

LazySeries parse_series_expr(const std::string& text) {
  std::string trimmed;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) trimmed += c;
  if (trimmed == "geom") return LazySeries::geometric();
  UniPoly p = UniPoly::parse(text, "e");
  std::vector<Rational> coeffs(p.coeffs().begin(), p.coeffs().end());
  return LazySeries::from_coeffs(std::move(coeffs));
}

namespace {

// term := factor ('*' factor)*, factor := rational | e[^k] | x[^k]
struct SeriesPolyParser {
  const std::string& s;
  size_t i = 0;

  [[noreturn]] void fail(const std::string& what) {
    throw std::invalid_argument("series polynomial parse error at position " + std::to_string(i) +
                                ": " + what + " in '" + s + "'");
  }

  void skip() {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
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

  size_t read_power() {
    skip();
    if (i < s.size() && s[i] == '^') {
      ++i;
      return read_uint().convert_to<size_t>();
    }
    return 1;
  }

  std::map<size_t, UniPoly> parse() {
    std::map<size_t, UniPoly> by_xpow;
    skip();
    bool neg = false;
    if (i < s.size() && (s[i] == '-' || s[i] == '+')) {
      neg = s[i] == '-';
      ++i;
    }
    for (;;) {
      Rational coef = 1;
      size_t epow = 0, xpow = 0;
      bool expect_factor = true;
      while (expect_factor) {
        skip();
        if (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
          Int num = read_uint();
          Int den = 1;
          skip();
          if (i < s.size() && s[i] == '/') {
            ++i;
            den = read_uint();
          }
          coef *= Rational(num, den);
        } else if (i < s.size() && s[i] == 'e') {
          ++i;
          epow += read_power();
        } else if (i < s.size() && s[i] == 'x') {
          ++i;
          xpow += read_power();
        } else {
          fail("expected a coefficient, 'e' or 'x'");
        }
        skip();
        expect_factor = i < s.size() && s[i] == '*';
        if (expect_factor) ++i;
      }
      if (neg) coef = -coef;
      auto [it, inserted] = by_xpow.emplace(xpow, UniPoly());
      it->second = it->second + UniPoly::monomial(coef, epow);
      skip();
      if (i >= s.size()) break;
      if (s[i] == '+')
        neg = false;
      else if (s[i] == '-')
        neg = true;
      else
        fail("expected '+' or '-'");
      ++i;
    }
    return by_xpow;
  }
};

}  // namespace

SeriesPoly parse_series_poly(const std::string& text) {
  SeriesPolyParser parser{text};
  auto by_xpow = parser.parse();
  SeriesPoly p;
  size_t deg = by_xpow.empty() ? 0 : by_xpow.rbegin()->first;
  p.coeffs.assign(deg + 1, LazySeries());
  for (auto& [xpow, poly] : by_xpow) {
    std::vector<Rational> coeffs(poly.coeffs().begin(), poly.coeffs().end());
    p.coeffs[xpow] = LazySeries::from_coeffs(std::move(coeffs));
  }
  return p;
}

}  // namespace realalg
