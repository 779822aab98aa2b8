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

#include "realalg/linear_entail.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace realalg {

bool LinForm::is_constant() const {
  return std::all_of(coeffs.begin(), coeffs.end(), [](const Rational& c) { return c.is_zero(); });
}

Rational LinForm::eval(const std::vector<Rational>& point) const {
  Rational acc = constant;
  for (size_t k = 0; k < coeffs.size(); ++k) acc += coeffs[k] * point[k];
  return acc;
}

LinForm LinForm::operator-() const {
  LinForm r = *this;
  for (auto& c : r.coeffs) c = -c;
  r.constant = -r.constant;
  return r;
}

LinForm operator+(const LinForm& a, const LinForm& b) {
  LinForm r = a;
  for (size_t k = 0; k < r.coeffs.size(); ++k) r.coeffs[k] += b.coeffs[k];
  r.constant += b.constant;
  return r;
}

LinForm operator-(const LinForm& a, const LinForm& b) { return a + (-b); }

LinForm operator*(const Rational& c, const LinForm& f) {
  LinForm r = f;
  for (auto& ck : r.coeffs) ck *= c;
  r.constant *= c;
  return r;
}

int LinForm::compare(const LinForm& a, const LinForm& b) {
  if (a.coeffs != b.coeffs) return a.coeffs < b.coeffs ? -1 : 1;
  if (a.constant != b.constant) return a.constant < b.constant ? -1 : 1;
  return 0;
}

std::string LinForm::str(const std::vector<std::string>& names) const {
  std::ostringstream os;
  bool first = true;
  for (size_t k = 0; k < coeffs.size(); ++k) {
    if (coeffs[k].is_zero()) continue;
    Rational a = coeffs[k].abs();
    if (first) {
      if (coeffs[k].sign() < 0) os << "-";
      first = false;
    } else {
      os << (coeffs[k].sign() < 0 ? " - " : " + ");
    }
    if (a != Rational(1)) os << a.str() << "*";
    os << names[k];
  }
  if (first) {
    os << constant.str();
  } else if (!constant.is_zero()) {
    os << (constant.sign() < 0 ? " - " : " + ") << constant.abs().str();
  }
  return os.str();
}

bool LinearConstraint::holds_at(const std::vector<Rational>& point) const {
  Rational v = form.eval(point);
  switch (rel) {
    case LinRel::GeqZero:
      return v.sign() >= 0;
    case LinRel::GtZero:
      return v.sign() > 0;
    case LinRel::EqZero:
      return v.is_zero();
  }
  return false;
}

namespace {

struct Row {
  LinForm form;
  LinRel rel;
  std::vector<Rational> mult;  // over the original row list
};

struct Snapshot {
  size_t var;
  std::vector<Row> rows;  // the system before eliminating `var`
};

struct FmOutcome {
  bool feasible = false;
  std::vector<Rational> point;
  std::vector<Rational> witness;  // infeasibility multipliers
  Rational witness_constant;
  bool witness_strict = false;  // a strict row participates
};

Row combine(const Row& a, const Rational& ca, const Row& b, const Rational& cb) {
  Row r;
  r.form = ca * a.form + cb * b.form;
  if (a.rel == LinRel::EqZero && b.rel == LinRel::EqZero)
    r.rel = LinRel::EqZero;
  else if ((a.rel == LinRel::GtZero && !ca.is_zero()) || (b.rel == LinRel::GtZero && !cb.is_zero()))
    r.rel = LinRel::GtZero;
  else
    r.rel = LinRel::GeqZero;
  r.mult.resize(a.mult.size());
  for (size_t k = 0; k < r.mult.size(); ++k) r.mult[k] = ca * a.mult[k] + cb * b.mult[k];
  return r;
}

// Fourier-Motzkin elimination over all variables with multiplier tracking.
FmOutcome fourier_motzkin(std::vector<Row> rows, size_t nvars) {
  std::vector<Snapshot> snapshots;
  std::vector<Row> constants;

  auto sift_constants = [&](std::vector<Row>& rs) {
    std::vector<Row> keep;
    for (Row& r : rs) {
      if (r.form.is_constant())
        constants.push_back(std::move(r));
      else
        keep.push_back(std::move(r));
    }
    rs = std::move(keep);
  };

  sift_constants(rows);
  std::vector<bool> eliminated(nvars, false);
  for (size_t step = 0; step < nvars; ++step) {
    // Greedy order: eliminate the variable with the fewest pair products.
    size_t best_var = nvars;
    long best_cost = -1;
    for (size_t v = 0; v < nvars; ++v) {
      if (eliminated[v]) continue;
      long pos = 0, neg = 0, eq = 0;
      for (const Row& r : rows) {
        int s = r.form.coeffs[v].sign();
        if (s == 0) continue;
        if (r.rel == LinRel::EqZero)
          ++eq;
        else if (s > 0)
          ++pos;
        else
          ++neg;
      }
      long cost = eq > 0 ? 0 : pos * neg;
      if (best_cost < 0 || cost < best_cost) {
        best_cost = cost;
        best_var = v;
      }
    }
    size_t v = best_var;
    eliminated[v] = true;
    snapshots.push_back({v, rows});

    // Prefer substitution through an equality row.
    ptrdiff_t pivot = -1;
    for (size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].rel == LinRel::EqZero && !rows[i].form.coeffs[v].is_zero()) {
        pivot = static_cast<ptrdiff_t>(i);
        break;
      }
    }
    std::vector<Row> next;
    if (pivot >= 0) {
      const Row piv = rows[static_cast<size_t>(pivot)];
      const Rational cv = piv.form.coeffs[v];
      for (size_t i = 0; i < rows.size(); ++i) {
        if (static_cast<ptrdiff_t>(i) == pivot) continue;
        const Rational c = rows[i].form.coeffs[v];
        if (c.is_zero()) {
          next.push_back(rows[i]);
        } else {
          next.push_back(combine(rows[i], Rational(1), piv, -c / cv));
        }
      }
    } else {
      std::vector<const Row*> pos, neg;
      for (const Row& r : rows) {
        int s = r.form.coeffs[v].sign();
        if (s == 0)
          next.push_back(r);
        else if (s > 0)
          pos.push_back(&r);
        else
          neg.push_back(&r);
      }
      for (const Row* p : pos) {
        for (const Row* q : neg) {
          Rational cp = Rational(1) / p->form.coeffs[v];
          Rational cq = Rational(-1) / q->form.coeffs[v];
          next.push_back(combine(*p, cp, *q, cq));
        }
      }
    }
    rows = std::move(next);
    sift_constants(rows);
  }

  // Consistency of the constant rows.
  for (const Row& r : constants) {
    const Rational& c = r.form.constant;
    bool ok = (r.rel == LinRel::EqZero)   ? c.is_zero()
              : (r.rel == LinRel::GtZero) ? c.sign() > 0
                                          : c.sign() >= 0;
    if (!ok) {
      FmOutcome out;
      out.feasible = false;
      out.witness = r.mult;
      out.witness_constant = c;
      out.witness_strict = r.rel == LinRel::GtZero;
      return out;
    }
  }

  // Feasible: back-substitute through the snapshots.
  FmOutcome out;
  out.feasible = true;
  out.point.assign(nvars, Rational(0));
  for (auto it = snapshots.rbegin(); it != snapshots.rend(); ++it) {
    const size_t v = it->var;
    bool have_pin = false, have_lo = false, have_hi = false;
    Rational pin, lo, hi;
    bool lo_strict = false, hi_strict = false;
    for (const Row& r : it->rows) {
      const Rational c = r.form.coeffs[v];
      if (c.is_zero()) continue;
      Rational rest = r.form.constant;
      for (size_t u = 0; u < nvars; ++u)
        if (u != v) rest += r.form.coeffs[u] * out.point[u];
      Rational bound = -rest / c;
      if (r.rel == LinRel::EqZero) {
        if (have_pin && pin != bound)
          throw std::logic_error("fourier_motzkin: inconsistent equality pins on a feasible system");
        have_pin = true;
        pin = bound;
      } else if (c.sign() > 0) {
        // c v + rest >= 0  =>  v >= bound
        bool strict = r.rel == LinRel::GtZero;
        if (!have_lo || bound > lo) {
          lo = bound;
          lo_strict = strict;
          have_lo = true;
        } else if (bound == lo) {
          lo_strict = lo_strict || strict;
        }
      } else {
        bool strict = r.rel == LinRel::GtZero;
        if (!have_hi || bound < hi) {
          hi = bound;
          hi_strict = strict;
          have_hi = true;
        } else if (bound == hi) {
          hi_strict = hi_strict || strict;
        }
      }
    }
    Rational value = 0;
    if (have_pin) {
      value = pin;
    } else if (have_lo && have_hi) {
      if (lo == hi) {
        if (lo_strict || hi_strict)
          throw std::logic_error("fourier_motzkin: empty interval on a feasible system");
        value = lo;
      } else {
        value = (lo + hi) / Rational(2);
      }
    } else if (have_lo) {
      value = lo + Rational(1);
    } else if (have_hi) {
      value = hi - Rational(1);
    }
    out.point[v] = value;
  }
  return out;
}

std::vector<Row> to_rows(const std::vector<LinearConstraint>& constraints, size_t extra) {
  std::vector<Row> rows;
  rows.reserve(constraints.size() + extra);
  const size_t total = constraints.size() + extra;
  for (size_t i = 0; i < constraints.size(); ++i) {
    Row r;
    r.form = constraints[i].form;
    r.rel = constraints[i].rel;
    r.mult.assign(total, Rational(0));
    r.mult[i] = Rational(1);
    rows.push_back(std::move(r));
  }
  return rows;
}

}  // namespace

bool verify_farkas(const std::vector<LinearConstraint>& constraints, const LinearConstraint& goal,
                   const FarkasCertificate& cert) {
  if (cert.lambda.size() != constraints.size()) return false;
  const size_t nvars = goal.form.nvars();
  LinForm sum(nvars);
  bool strict_used = false;
  for (size_t i = 0; i < constraints.size(); ++i) {
    if (constraints[i].rel != LinRel::EqZero && cert.lambda[i].sign() < 0) return false;
    if (constraints[i].rel == LinRel::GtZero && cert.lambda[i].sign() > 0) strict_used = true;
    sum = sum + cert.lambda[i] * constraints[i].form;
  }
  if (cert.infeasible) {
    if (!sum.is_constant()) return false;
    return sum.constant.sign() < 0 || (strict_used && sum.constant.sign() <= 0);
  }
  if (cert.residual.sign() < 0) return false;
  LinForm target = sum;
  target.constant += cert.residual;
  if (!(target == goal.form)) return false;
  if (goal.rel == LinRel::GtZero && !strict_used && cert.residual.sign() <= 0) return false;
  return true;
}

EntailResult linear_entailment(const std::vector<LinearConstraint>& constraints,
                               const LinearConstraint& goal) {
  const size_t nvars = goal.form.nvars();
  if (goal.rel == LinRel::EqZero) {
    LinearConstraint up{goal.form, LinRel::GeqZero};
    LinearConstraint dn{-goal.form, LinRel::GeqZero};
    EntailResult r1 = linear_entailment(constraints, up);
    if (!r1.entailed) return r1;
    EntailResult r2 = linear_entailment(constraints, dn);
    if (!r2.entailed) return r2;
    EntailResult out;
    out.entailed = true;
    out.certs = std::move(r1.certs);
    out.certs.insert(out.certs.end(), r2.certs.begin(), r2.certs.end());
    return out;
  }

  // constraints |= goal  iff  constraints + (negated goal) is infeasible.
  std::vector<Row> rows = to_rows(constraints, 1);
  Row neg;
  neg.form = -goal.form;
  neg.rel = goal.rel == LinRel::GeqZero ? LinRel::GtZero : LinRel::GeqZero;
  neg.mult.assign(constraints.size() + 1, Rational(0));
  neg.mult.back() = Rational(1);
  rows.push_back(std::move(neg));

  FmOutcome fm = fourier_motzkin(std::move(rows), nvars);
  EntailResult out;
  if (fm.feasible) {
    out.entailed = false;
    out.point = std::move(fm.point);
    return out;
  }
  out.entailed = true;
  FarkasCertificate cert;
  const Rational lambda0 = fm.witness.back();
  if (lambda0.is_zero()) {
    // The hypotheses alone are contradictory.
    cert.infeasible = true;
    cert.lambda.assign(fm.witness.begin(), fm.witness.end() - 1);
    cert.residual = fm.witness_constant;
  } else {
    cert.infeasible = false;
    cert.lambda.resize(constraints.size());
    for (size_t i = 0; i < constraints.size(); ++i) cert.lambda[i] = fm.witness[i] / lambda0;
    // lambda0 * (-goal) + sum lambda_i row_i = c  =>
    // goal = sum (lambda_i / lambda0) row_i - c / lambda0.
    cert.residual = -fm.witness_constant / lambda0;
  }
  if (!verify_farkas(constraints, goal, cert))
    throw std::logic_error("linear_entailment: produced certificate failed re-verification");
  out.certs.push_back(std::move(cert));
  return out;
}

std::optional<std::vector<Rational>> linear_feasible_point(
    const std::vector<LinearConstraint>& constraints, size_t nvars) {
  FmOutcome fm = fourier_motzkin(to_rows(constraints, 0), nvars);
  if (!fm.feasible) return std::nullopt;
  return fm.point;
}

}  // namespace realalg
