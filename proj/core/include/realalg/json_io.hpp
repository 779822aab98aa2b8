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

#ifndef REALALG_JSON_IO_H_
#define REALALG_JSON_IO_H_

#include <string>

#include "realalg/collapse_cert.hpp"
#include "realalg/complex_sqrt.hpp"
#include "realalg/sign_table.hpp"
#include "realalg/virtual_roots.hpp"

namespace realalg {

// JSON renderings of the library values. All numbers are "p/q" strings so
// payloads stay exact and byte-stable across runs. Documents are emitted
// with sorted keys and no insignificant whitespace.

// {"rational": "p/q"} or {"defpoly": "...", "lo": "p/q", "hi": "p/q"}
std::string algebraic_to_json(const RealAlgebraic& a);

// {"degree": d, "bound": "p/q", "rho": [[level 1], ..., [level d]]}
std::string triangle_to_json(const VirtualRootTriangle& t);

// {"regions": [{"kind": "interval"|"point", ...}, ...]}
std::string sign_table_to_json(const SignTable& table);

// {"u": ..., "v": ..., "f1": [...], "f2": [...], "identity_ok": ...}
std::string csqrt_to_json(const ComplexSqrtCover& c);

// Presentation document:
//   {"generators": ["x", ...], "gt0": ["<poly>", ...],
//    "geq0": [...], "eq0": [...]}
RingPresentation parse_presentation_json(const std::string& text);

// Certificate document:
//   {"s": [idx, ...],
//    "p": [{"coeff": "p/q", "square": "<poly>", "gt0": [...], "geq0": [...]}],
//    "z": [{"mult": "<poly>", "idx": k}]}
CollapseCertificate parse_certificate_json(const std::string& text,
                                           const RingPresentation& pres);

// Multivariate polynomial over named generators, for the documents above.
MultiPoly parse_generator_poly(const std::string& text,
                               const std::vector<std::string>& generators);

}  // namespace realalg

#endif  // REALALG_JSON_IO_H_
