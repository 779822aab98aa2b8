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

#include "realalg/sign_table.hpp"

namespace realalg {

SignTable sign_table(const VirtualRootTriangle& t) {
  const int d = t.degree();
  const UniPoly& f = t.poly().poly();

  // Deduplicate rho(d, 1) <= ... <= rho(d, d), remembering the largest
  // multiset index attaining each distinct value: the gap just right of a
  // boundary carries the sign (-1)^(d - j) for that index j.
  SignTable table;
  std::vector<int> last_index;
  for (int j = 1; j <= d; ++j) {
    const RealAlgebraic& v = t.rho(d, j);
    if (!table.boundaries.empty() && algebraic_compare(table.boundaries.back(), v) == 0) {
      last_index.back() = j;
    } else {
      table.boundaries.push_back(v);
      last_index.push_back(j);
    }
  }

  auto gap = [&](const ExtendedBound& lo, const ExtendedBound& hi, int sign) {
    SignTable::Region r;
    r.kind = SignTable::Region::Kind::Gap;
    r.lo = lo;
    r.hi = hi;
    r.sign = sign;
    table.regions.push_back(std::move(r));
  };

  const size_t n = table.boundaries.size();
  for (size_t i = 0; i <= n; ++i) {
    int j = (i == 0) ? 0 : last_index[i - 1];
    int sign = ((d - j) % 2 == 0) ? 1 : -1;
    ExtendedBound lo = (i == 0) ? ExtendedBound::neg_inf()
                                : ExtendedBound::finite(table.boundaries[i - 1]);
    ExtendedBound hi =
        (i == n) ? ExtendedBound::pos_inf() : ExtendedBound::finite(table.boundaries[i]);
    gap(lo, hi, sign);
    if (i < n) {
      SignTable::Region p;
      p.kind = SignTable::Region::Kind::Point;
      p.at = table.boundaries[i];
      p.sign = algebraic_sign(f, table.boundaries[i]);
      table.regions.push_back(std::move(p));
    }
  }
  return table;
}

}  // namespace realalg
