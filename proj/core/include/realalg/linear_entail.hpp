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

#ifndef REALALG_LINEAR_ENTAIL_H_
#define REALALG_LINEAR_ENTAIL_H_

#include <optional>
#include <string>
#include <vector>

#include "realalg/rational.hpp"

namespace realalg {

// Affine form c . x + constant over a fixed variable context.
struct LinForm {
  std::vector<Rational> coeffs;
  Rational constant;

  explicit LinForm(size_t nvars = 0) : coeffs(nvars, Rational(0)), constant(0) {}

  size_t nvars() const { return coeffs.size(); }
  bool is_constant() const;
  Rational eval(const std::vector<Rational>& point) const;

  LinForm operator-() const;
  friend LinForm operator+(const LinForm& a, const LinForm& b);
  friend LinForm operator-(const LinForm& a, const LinForm& b);
  friend LinForm operator*(const Rational& c, const LinForm& f);
  friend bool operator==(const LinForm& a, const LinForm& b) {
    return a.coeffs == b.coeffs && a.constant == b.constant;
  }

  // Deterministic order by coefficient vector then constant.
  static int compare(const LinForm& a, const LinForm& b);

  std::string str(const std::vector<std::string>& names) const;
};

enum class LinRel { GeqZero, GtZero, EqZero };

struct LinearConstraint {
  LinForm form;
  LinRel rel = LinRel::GeqZero;

  bool holds_at(const std::vector<Rational>& point) const;
};

// Farkas-style certificate: nonnegative multipliers for inequality rows,
// free multipliers for equality rows, such that
//   goal.form  =  sum_i lambda[i] * constraint[i].form  +  residual
// with residual >= 0, or (when `infeasible` is set) such that the
// combination alone is an impossible constant constraint.
struct FarkasCertificate {
  std::vector<Rational> lambda;
  Rational residual;
  bool infeasible = false;
};

// Re-verifies a certificate by exact rational linear algebra.
bool verify_farkas(const std::vector<LinearConstraint>& constraints, const LinearConstraint& goal,
                   const FarkasCertificate& cert);

struct EntailResult {
  bool entailed = false;
  std::vector<FarkasCertificate> certs;  // one for Geq goals, two for Eq goals
  std::vector<Rational> point;           // populated on refutation
};

// Decides constraints |= goal over the rationals with Fourier-Motzkin
// elimination. Entailed carries verifiable multipliers; Refuted carries a
// rational point satisfying the constraints and violating the goal.
EntailResult linear_entailment(const std::vector<LinearConstraint>& constraints,
                               const LinearConstraint& goal);

// Feasibility of a constraint set; returns a satisfying point if feasible.
std::optional<std::vector<Rational>> linear_feasible_point(
    const std::vector<LinearConstraint>& constraints, size_t nvars);

}  // namespace realalg

#endif  // REALALG_LINEAR_ENTAIL_H_
