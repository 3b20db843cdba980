// Copyright 2026 The pancake-color Authors
//
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

#pragma once

#include <optional>
#include <string>
#include <vector>

namespace pancake {

// One upper-bound formula evaluated at n.  `value` is meaningful only when
// `applicable` is true.
struct BoundRow {
  std::string id;       // "trivial", "brooks-improved", "catlin", "piecewise", "subadditive"
  int value = 0;
  bool applicable = false;
  std::string detail;   // human-readable form of the formula instance
};

// All known upper bounds on chi(P_n) side by side.
struct BoundReport {
  int n = 0;
  std::vector<BoundRow> rows;
  // Exact chromatic number when known (2 <= n <= 9).
  std::optional<int> known_chi;
  // Minimum over applicable rows and known_chi.
  int best_upper = 0;
  // Best known lower bound: 2 for n <= 3, 3 for n in {4, 5} (7-cycles), 4
  // for n >= 6 (P_6 is an induced subgraph of every larger P_n).
  int lower = 0;
};

// chi(P_r) for the subadditive decomposition: 0 for r = 0 (empty block),
// 1 for r = 1, Table values for 2 <= r <= 9.  Larger r is out of range.
int known_chi_small(int r);

// Evaluates every formula on its stated applicability range:
//   trivial          chi <= n - 1            (n >= 4)
//   brooks-improved  chi <= n - 2            (n >= 5)
//   catlin           chi <= 2(n + 2)/3       (n >= 8)
//   piecewise        three branches by n mod 4, for 5 <= n <= 8, 9 <= n <= 16,
//                    and n >= 17
//   subadditive      chi <= 4*floor(n/9) + chi(P_{n mod 9})   (n >= 9)
// Requires n >= 2.
BoundReport upper_bound_table(int n);

}  // namespace pancake
