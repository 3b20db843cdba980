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

#include <doctest.h>

#include <map>
#include <stdexcept>

#include "pancake/bounds.hpp"

using namespace pancake;

namespace {

int row_value(const BoundReport& report, const std::string& id) {
  for (const auto& row : report.rows) {
    if (row.id == id) {
      REQUIRE(row.applicable);
      return row.value;
    }
  }
  FAIL("missing row ", id);
  return -1;
}

bool row_applicable(const BoundReport& report, const std::string& id) {
  for (const auto& row : report.rows) {
    if (row.id == id) return row.applicable;
  }
  return false;
}

}  // namespace

TEST_SUITE_BEGIN("bounds");

TEST_CASE("known chromatic numbers, including the small-block conventions") {
  CHECK(known_chi_small(0) == 0);
  CHECK(known_chi_small(1) == 1);
  const std::map<int, int> table{{2, 2}, {3, 2}, {4, 3}, {5, 3}, {6, 4}, {7, 4}, {8, 4}, {9, 4}};
  for (const auto [n, chi] : table) CHECK(known_chi_small(n) == chi);
  CHECK_THROWS_AS(known_chi_small(10), std::invalid_argument);
}

TEST_CASE("n = 9: the formulas give 6, 7 and 4") {
  const auto report = upper_bound_table(9);
  CHECK(row_value(report, "piecewise") == 6);
  CHECK(row_value(report, "catlin") == 7);
  CHECK(row_value(report, "subadditive") == 4);
  CHECK(report.known_chi == 4);
  CHECK(report.best_upper == 4);
  CHECK(report.lower == 4);
}

TEST_CASE("n = 20: the subadditive bound beats the rest") {
  const auto report = upper_bound_table(20);
  CHECK(row_value(report, "piecewise") == 12);
  CHECK(row_value(report, "catlin") == 14);
  CHECK(row_value(report, "subadditive") == 10);  // 4*2 + chi(P_2)
  CHECK(report.best_upper == 10);
  CHECK(!report.known_chi.has_value());
}

TEST_CASE("n = 4: trivial bound plus the known value") {
  const auto report = upper_bound_table(4);
  CHECK(row_value(report, "trivial") == 3);
  CHECK(!row_applicable(report, "brooks-improved"));
  CHECK(!row_applicable(report, "catlin"));
  CHECK(!row_applicable(report, "subadditive"));
  CHECK(report.known_chi == 3);
  CHECK(report.best_upper == 3);
  CHECK(report.lower == 3);
}

TEST_CASE("piecewise branch values across the three ranges") {
  const std::map<int, int> expected{
      {5, 4}, {6, 4}, {7, 4}, {8, 6},        // n - k (odd k) / n - 2
      {9, 6}, {10, 6}, {11, 6}, {12, 8},     // n - (k+2) / n - 4
      {13, 10}, {16, 12},                    // same range
      {17, 12}, {18, 12}, {19, 12}, {20, 12},  // n - (k+4) / n - 8
      {21, 16}, {25, 20}, {29, 24}};
  for (const auto [n, value] : expected) {
    CAPTURE(n);
    CHECK(row_value(upper_bound_table(n), "piecewise") == value);
  }
}

TEST_CASE("subadditive remainder conventions") {
  CHECK(row_value(upper_bound_table(9), "subadditive") == 4);    // 4 + chi(P_0) = 4
  CHECK(row_value(upper_bound_table(10), "subadditive") == 5);   // 4 + chi(P_1) = 5
  CHECK(row_value(upper_bound_table(11), "subadditive") == 6);   // 4 + chi(P_2)
  CHECK(row_value(upper_bound_table(17), "subadditive") == 8);   // 4 + chi(P_8)
  CHECK(row_value(upper_bound_table(18), "subadditive") == 8);   // 8 + chi(P_0)
  CHECK(row_value(upper_bound_table(27), "subadditive") == 12);
  CHECK(row_value(upper_bound_table(10000), "subadditive") == 4 * 1111 + 1);  // 10000 = 9*1111 + 1
}

TEST_CASE("report invariants over a wide sweep") {
  for (int n = 2; n <= 10000; ++n) {
    const auto report = upper_bound_table(n);
    CAPTURE(n);
    CHECK(report.lower <= report.best_upper);
    for (const auto& row : report.rows) {
      if (row.applicable) CHECK(report.best_upper <= row.value);
    }
    if (report.known_chi) {
      CHECK(report.best_upper == *report.known_chi);
      CHECK(report.lower <= *report.known_chi);
    }
  }
}

TEST_CASE("the subadditive bound improves on Catlin for every n from 29 to 10000") {
  for (int n = 29; n <= 10000; ++n) {
    const auto report = upper_bound_table(n);
    CAPTURE(n);
    CHECK(row_value(report, "subadditive") < row_value(report, "catlin"));
  }
}

TEST_CASE("small n guard") {
  CHECK_THROWS_AS(upper_bound_table(1), std::invalid_argument);
  const auto p2 = upper_bound_table(2);
  CHECK(p2.known_chi == 2);
  CHECK(p2.best_upper == 2);
  CHECK(p2.lower == 2);
}

TEST_SUITE_END();
