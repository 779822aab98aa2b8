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

#ifndef REALALG_SIGN_TABLE_H_
#define REALALG_SIGN_TABLE_H_

#include <vector>

#include "realalg/virtual_roots.hpp"

namespace realalg {

// Complete sign description of a monic polynomial over the real line,
// anchored at the deduplicated top-row virtual roots. Regions alternate
// gap, point, gap, ..., point, gap. Over the real algebraic numbers every
// adjacency is decided, so every region is Exact; CoveredUpToVr exists for
// backends without a sign test.
struct SignTable {
  enum class Resolution { Exact, CoveredUpToVr };

  struct Region {
    enum class Kind { Gap, Point };
    Kind kind = Kind::Gap;
    // Gap: open interval (lo, hi); Point: the boundary value `at`.
    ExtendedBound lo, hi;
    RealAlgebraic at;
    int sign = 0;
    Resolution resolution = Resolution::Exact;
  };

  std::vector<RealAlgebraic> boundaries;  // strictly increasing
  std::vector<Region> regions;            // 2 * boundaries.size() + 1 entries
};

SignTable sign_table(const VirtualRootTriangle& t);

}  // namespace realalg

#endif  // REALALG_SIGN_TABLE_H_
