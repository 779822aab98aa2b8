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

#ifndef REALALG_MULTIPOLY_H_
#define REALALG_MULTIPOLY_H_

#include <map>
#include <string>
#include <vector>

#include "realalg/rational.hpp"
#include "realalg/unipoly.hpp"

namespace realalg {

// Sparse multivariate polynomial over an externally fixed variable list.
// Exponent vectors all have the same length (the context size); terms are
// kept sorted by the map's lexicographic exponent order with no zero
// coefficients.
class MultiPoly {
 public:
  MultiPoly() : nvars_(0) {}
  explicit MultiPoly(size_t nvars) : nvars_(nvars) {}

  static MultiPoly constant(size_t nvars, const Rational& c);
  static MultiPoly variable(size_t nvars, size_t index);

  size_t nvars() const { return nvars_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  Rational constant_value() const;  // requires is_constant()
  int total_degree() const;         // -1 for the zero polynomial

  const std::map<std::vector<unsigned>, Rational>& terms() const { return terms_; }

  void add_term(const std::vector<unsigned>& expo, const Rational& c);

  MultiPoly operator-() const;
  friend MultiPoly operator+(const MultiPoly& a, const MultiPoly& b);
  friend MultiPoly operator-(const MultiPoly& a, const MultiPoly& b);
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
  friend MultiPoly operator*(const Rational& c, const MultiPoly& p);
  friend bool operator==(const MultiPoly& a, const MultiPoly& b) {
    return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
  }
  friend bool operator!=(const MultiPoly& a, const MultiPoly& b) { return !(a == b); }

  Rational eval(const std::vector<Rational>& point) const;

  // Total deterministic order used by the normal form (degree, then
  // exponent/coefficient lexicographic).
  static int compare(const MultiPoly& a, const MultiPoly& b);

  // Projection to a univariate polynomial; requires that at most the
  // given variable occurs.
  UniPoly to_unipoly(size_t var_index) const;

  std::string str(const std::vector<std::string>& var_names) const;

 private:
  size_t nvars_;
  std::map<std::vector<unsigned>, Rational> terms_;
};

}  // namespace realalg

#endif  // REALALG_MULTIPOLY_H_
