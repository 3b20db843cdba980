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

#include "pancake/bounds.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace pancake {

namespace {

// Exact chromatic numbers for 2 <= n <= 9.
constexpr int kTableChi[] = {2, 2, 3, 3, 4, 4, 4, 4};

int piecewise_value(int n) {
  const int k = n % 4;
  if (n <= 8) {                       // 5 <= n <= 8
    return k % 2 == 1 ? n - k : n - 2;
  }
  if (n <= 16) {                      // 9 <= n <= 16
    return k % 2 == 1 ? n - (k + 2) : n - 4;
  }
  return k == 0 ? n - 8 : n - (k + 4);  // n >= 17
}

}  // namespace

int known_chi_small(int r) {
  if (r == 0) return 0;  // empty block contributes no colors
  if (r == 1) return 1;  // single vertex
  if (r <= 9) return kTableChi[r - 2];
  throw std::invalid_argument("known_chi_small: chromatic number unknown for n = " +
                              std::to_string(r));
}

BoundReport upper_bound_table(int n) {
  if (n < 2) {
    throw std::invalid_argument("upper_bound_table: n must be at least 2, got " +
                                std::to_string(n));
  }
  BoundReport report;
  report.n = n;

  const auto add = [&report](std::string id, bool applicable, int value, std::string detail) {
    report.rows.push_back({std::move(id), value, applicable, std::move(detail)});
  };

  add("trivial", n >= 4, n - 1, "n - 1 = " + std::to_string(n - 1));
  add("brooks-improved", n >= 5, n - 2, "n - 2 = " + std::to_string(n - 2));
  add("catlin", n >= 8, 2 * (n + 2) / 3,
      "2(n + 2)/3 = " + std::to_string(2 * (n + 2) / 3));
  add("piecewise", n >= 5, n >= 5 ? piecewise_value(n) : 0,
      n >= 5 ? "branch for n mod 4 = " + std::to_string(n % 4) : "");
  const bool sub_ok = n >= 9;
  int sub_value = 0;
  std::string sub_detail;
  if (sub_ok) {
    const int q = n / 9;
    const int r = n % 9;
    sub_value = 4 * q + known_chi_small(r);
    sub_detail = "4*" + std::to_string(q) + " + chi(P_" + std::to_string(r) + ") = " +
                 std::to_string(sub_value);
  }
  add("subadditive", sub_ok, sub_value, std::move(sub_detail));

  if (n <= 9) report.known_chi = known_chi_small(n);

  report.best_upper = report.known_chi.value_or(n);
  for (const BoundRow& row : report.rows) {
    if (row.applicable) report.best_upper = std::min(report.best_upper, row.value);
  }

  report.lower = n <= 3 ? 2 : (n <= 5 ? 3 : 4);
  return report;
}

}  // namespace pancake
