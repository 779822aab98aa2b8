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

#ifndef REALALG_RATIONAL_H_
#define REALALG_RATIONAL_H_

#include <cstdint>
#include <iosfwd>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace realalg {

using Int = boost::multiprecision::cpp_int;

// Arbitrary-precision rational number, always kept in lowest terms with a
// positive denominator. The text form is "p/q", or just "p" when q = 1.
class Rational {
 public:
  Rational() : v_(0) {}
  Rational(int n) : v_(n) {}                // NOLINT: implicit by design
  Rational(long n) : v_(n) {}               // NOLINT
  Rational(long long n) : v_(n) {}          // NOLINT
  Rational(const Int& n) : v_(n) {}         // NOLINT
  Rational(const Int& num, const Int& den);

  static Rational parse(const std::string& text);

  Int num() const { return boost::multiprecision::numerator(v_); }
  Int den() const { return boost::multiprecision::denominator(v_); }

  bool is_zero() const { return v_.is_zero(); }
  bool is_integer() const { return den() == 1; }
  int sign() const { return v_.sign(); }

  Rational abs() const { return sign() < 0 ? -*this : *this; }

  Rational operator-() const;
  Rational& operator+=(const Rational& o);
  Rational& operator-=(const Rational& o);
  Rational& operator*=(const Rational& o);
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
  friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
  friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
  friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
  friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
  friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

  std::string str() const;
  double to_double() const { return v_.convert_to<double>(); }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r);

 private:
  boost::multiprecision::cpp_rational v_;
};

// Largest integer <= r, resp. smallest integer >= r.
Int rational_floor(const Rational& r);
Int rational_ceil(const Rational& r);

// r^k for k >= 0 (0^0 = 1).
Rational rational_pow(const Rational& r, unsigned k);

Rational min(const Rational& a, const Rational& b);
Rational max(const Rational& a, const Rational& b);

}  // namespace realalg

#endif  // REALALG_RATIONAL_H_
