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

#include "realalg/json_io.hpp"

#include <stdexcept>

#include <nlohmann/json.hpp>

#include "realalg/sup_inf_nf.hpp"

namespace realalg {

using nlohmann::json;

namespace {

json algebraic_json(const RealAlgebraic& a) {
  json j;
  if (a.is_rational()) {
    j["rational"] = a.rational_value().str();
  } else {
    j["defpoly"] = a.defpoly().str();
    j["lo"] = a.lower().str();
    j["hi"] = a.upper().str();
  }
  return j;
}

json bound_json(const ExtendedBound& b) {
  if (b.kind == ExtendedBound::Kind::NegInf) return json("-inf");
  if (b.kind == ExtendedBound::Kind::PosInf) return json("+inf");
  return algebraic_json(b.value);
}

}  // namespace

std::string algebraic_to_json(const RealAlgebraic& a) { return algebraic_json(a).dump(); }

std::string triangle_to_json(const VirtualRootTriangle& t) {
  json j;
  j["degree"] = t.degree();
  j["bound"] = t.bound().str();
  json levels = json::array();
  for (const auto& level : t.levels()) {
    json row = json::array();
    for (const RealAlgebraic& v : level) row.push_back(algebraic_json(v));
    levels.push_back(std::move(row));
  }
  j["rho"] = std::move(levels);
  return j.dump();
}

std::string sign_table_to_json(const SignTable& table) {
  json regions = json::array();
  for (const auto& r : table.regions) {
    json jr;
    jr["sign"] = r.sign;
    jr["resolution"] =
        r.resolution == SignTable::Resolution::Exact ? "exact" : "covered-up-to-vr";
    if (r.kind == SignTable::Region::Kind::Point) {
      jr["kind"] = "point";
      jr["at"] = algebraic_json(r.at);
    } else {
      jr["kind"] = "interval";
      jr["lo"] = bound_json(r.lo);
      jr["hi"] = bound_json(r.hi);
    }
    regions.push_back(std::move(jr));
  }
  json j;
  j["regions"] = std::move(regions);
  return j.dump();
}

std::string csqrt_to_json(const ComplexSqrtCover& c) {
  json j;
  j["u"] = algebraic_json(c.u);
  j["v"] = algebraic_json(c.v);
  json f1 = json::array(), f2 = json::array();
  for (const RealAlgebraic& a : c.f1.coeffs) f1.push_back(algebraic_json(a));
  for (const RealAlgebraic& a : c.f2.coeffs) f2.push_back(algebraic_json(a));
  j["f1"] = std::move(f1);
  j["f2"] = std::move(f2);
  j["identity_ok"] = c.identity_ok;
  j["z1_squared_ok"] = c.z1_squared_ok;
  return j.dump();
}

MultiPoly parse_generator_poly(const std::string& text,
                               const std::vector<std::string>& generators) {
  // Reuse the term grammar, rejecting lattice operations.
  Term t = parse_term(text);
  SupInfNF nf = to_sup_inf_nf(t, generators);
  if (nf.families.size() != 1 || nf.families[0].size() != 1)
    throw std::invalid_argument("expected a polynomial without lattice operations: '" + text +
                                "'");
  return nf.families[0][0];
}

RingPresentation parse_presentation_json(const std::string& text) {
  json j = json::parse(text);
  RingPresentation pres;
  for (const auto& g : j.at("generators")) pres.generators.push_back(g.get<std::string>());
  auto read_set = [&](const char* key, std::vector<MultiPoly>& out) {
    if (!j.contains(key)) return;
    for (const auto& p : j.at(key))
      out.push_back(parse_generator_poly(p.get<std::string>(), pres.generators));
  };
  read_set("gt0", pres.gt0);
  read_set("geq0", pres.geq0);
  read_set("eq0", pres.eq0);
  return pres;
}

CollapseCertificate parse_certificate_json(const std::string& text,
                                           const RingPresentation& pres) {
  json j = json::parse(text);
  CollapseCertificate cert;
  if (j.contains("s"))
    for (const auto& idx : j.at("s")) cert.s.push_back(idx.get<size_t>());
  if (j.contains("p")) {
    for (const auto& jp : j.at("p")) {
      ConeTerm term;
      term.coeff = Rational::parse(jp.at("coeff").get<std::string>());
      term.square = jp.contains("square")
                        ? parse_generator_poly(jp.at("square").get<std::string>(), pres.generators)
                        : MultiPoly::constant(pres.generators.size(), Rational(1));
      if (jp.contains("gt0"))
        for (const auto& idx : jp.at("gt0")) term.gt0_indices.push_back(idx.get<size_t>());
      if (jp.contains("geq0"))
        for (const auto& idx : jp.at("geq0")) term.geq0_indices.push_back(idx.get<size_t>());
      cert.p.push_back(std::move(term));
    }
  }
  if (j.contains("z")) {
    for (const auto& jz : j.at("z")) {
      IdealTerm term;
      term.multiplier = parse_generator_poly(jz.at("mult").get<std::string>(), pres.generators);
      term.eq0_index = jz.at("idx").get<size_t>();
      cert.z.push_back(std::move(term));
    }
  }
  return cert;
}

}  // namespace realalg
