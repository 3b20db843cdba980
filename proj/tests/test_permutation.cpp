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

#include <algorithm>
#include <random>
#include <vector>

#include "pancake/permutation.hpp"

using namespace pancake;

namespace {

// Independent parity oracle: count inversions.
Parity parity_by_inversions(const Permutation& p) {
  const auto& e = p.entries();
  int inv = 0;
  for (std::size_t i = 0; i < e.size(); ++i)
    for (std::size_t j = i + 1; j < e.size(); ++j)
      if (e[i] > e[j]) ++inv;
  return (inv % 2 == 0) ? Parity::even : Parity::odd;
}

// Independent rank oracle: position in the next_permutation enumeration.
std::vector<Permutation> all_permutations(int n) {
  std::vector<std::uint8_t> e(n);
  for (int i = 0; i < n; ++i) e[i] = std::uint8_t(i + 1);
  std::vector<Permutation> out;
  do {
    out.push_back(Permutation(e));
  } while (std::next_permutation(e.begin(), e.end()));
  return out;
}

Permutation random_permutation(int n, std::mt19937& rng) {
  std::vector<std::uint8_t> e(n);
  for (int i = 0; i < n; ++i) e[i] = std::uint8_t(i + 1);
  for (int i = n - 1; i > 0; --i) {
    const int j = int(rng() % (i + 1));
    std::swap(e[i], e[j]);
  }
  return Permutation(std::move(e));
}

}  // namespace

TEST_SUITE_BEGIN("permutation");

TEST_CASE("prefix reversal definition") {
  CHECK(apply_reversal(Permutation::parse("[12345]"), 4) == Permutation::parse("[43215]"));
  CHECK(apply_reversal(Permutation::parse("[43215]"), 4) == Permutation::parse("[12345]"));
  CHECK(apply_reversal(Permutation::parse("[132]"), 2) == Permutation::parse("[312]"));
  CHECK(apply_reversal(Permutation::parse("[1234]"), 4) == Permutation::parse("[4321]"));
}

TEST_CASE("prefix reversal range errors") {
  const auto p = Permutation::parse("[1234]");
  CHECK_THROWS_AS(apply_reversal(p, 1), std::out_of_range);
  CHECK_THROWS_AS(apply_reversal(p, 5), std::out_of_range);
  CHECK_THROWS_AS(apply_reversal(p, 0), std::out_of_range);
}

TEST_CASE("reversal is an involution") {
  for (int n = 2; n <= 6; ++n) {
    for (const auto& p : all_permutations(n))
      for (int i = 2; i <= n; ++i)
        CHECK(apply_reversal(apply_reversal(p, i), i) == p);
  }
  std::mt19937 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 7 + int(rng() % 14);  // up to 20
    const auto p = random_permutation(n, rng);
    const int i = 2 + int(rng() % (n - 1));
    CHECK(apply_reversal(apply_reversal(p, i), i) == p);
  }
}

TEST_CASE("parity of known permutations") {
  CHECK(parity(Permutation::parse("[12345]")) == Parity::even);
  CHECK(parity(Permutation::parse("[321]")) == Parity::odd);
  // [43215] has 6 inversions
  CHECK(parity_by_inversions(Permutation::parse("[43215]")) == Parity::even);
  CHECK(parity(Permutation::parse("[43215]")) == Parity::even);
}

TEST_CASE("parity matches the inversion-count oracle") {
  for (int n = 1; n <= 6; ++n)
    for (const auto& p : all_permutations(n))
      CHECK(parity(p) == parity_by_inversions(p));
  std::mt19937 rng(11);
  for (int trial = 0; trial < 500; ++trial) {
    const auto p = random_permutation(7 + int(rng() % 4), rng);
    CHECK(parity(p) == parity_by_inversions(p));
  }
}

TEST_CASE("reversal parity rule mod 4") {
  CHECK(reversal_parity(4) == Parity::even);
  CHECK(reversal_parity(5) == Parity::even);
  CHECK(reversal_parity(6) == Parity::odd);
  CHECK(reversal_parity(2) == Parity::odd);
  CHECK(reversal_parity(3) == Parity::odd);
  CHECK(reversal_parity(8) == Parity::even);
  CHECK_THROWS_AS(reversal_parity(1), std::out_of_range);
}

TEST_CASE("reversal parity agrees with the sign of r_i itself") {
  for (int i = 2; i <= 12; ++i) {
    const auto r_i = apply_reversal(Permutation::identity(i), i);
    CHECK(reversal_parity(i) == parity(r_i));
  }
}

TEST_CASE("applying a reversal flips the sign iff the reversal is odd") {
  for (int n = 2; n <= 6; ++n) {
    for (const auto& p : all_permutations(n)) {
      for (int i = 2; i <= n; ++i) {
        const bool same = parity(apply_reversal(p, i)) == parity(p);
        CHECK(same == (reversal_parity(i) == Parity::even));
      }
    }
  }
  std::mt19937 rng(13);
  for (int trial = 0; trial < 500; ++trial) {
    const int n = 7 + int(rng() % 4);  // up to 10
    const auto p = random_permutation(n, rng);
    const int i = 2 + int(rng() % (n - 1));
    const bool same = parity(apply_reversal(p, i)) == parity(p);
    CHECK(same == (reversal_parity(i) == Parity::even));
  }
}

TEST_CASE("lexicographic rank examples") {
  CHECK(lex_rank(Permutation::parse("[123]")) == 0);
  CHECK(lex_rank(Permutation::parse("[321]")) == 5);
  // enumeration oracle: 123, 132, 213, ...
  const auto sym3 = all_permutations(3);
  CHECK(sym3[2] == Permutation::parse("[213]"));
  CHECK(lex_rank(Permutation::parse("[213]")) == 2);
}

TEST_CASE("lexicographic unrank examples") {
  CHECK(lex_unrank(0, 4) == Permutation::parse("[1234]"));
  CHECK(lex_unrank(23, 4) == Permutation::parse("[4321]"));
  CHECK(lex_unrank(2, 3) == Permutation::parse("[213]"));
  CHECK_THROWS_AS(lex_unrank(24, 4), std::out_of_range);
}

TEST_CASE("rank and unrank are inverse bijections") {
  for (int n = 1; n <= 7; ++n) {
    const auto perms = all_permutations(n);
    for (Rank r = 0; r < factorial(n); ++r) {
      const auto p = lex_unrank(r, n);
      CHECK(p == perms[r]);  // unrank agrees with the enumeration order
      CHECK(lex_rank(p) == r);
    }
  }
  std::mt19937 rng(17);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 8 + int(rng() % 13);  // up to 20
    const auto p = random_permutation(n, rng);
    CHECK(lex_unrank(lex_rank(p), n) == p);
  }
}

TEST_CASE("text form round trips") {
  CHECK(Permutation::parse("[14352]").str() == "[14352]");
  CHECK(Permutation::parse("1 4 3 5 2") == Permutation::parse("[14352]"));
  CHECK(Permutation::parse("[1 4 3 5 2]") == Permutation::parse("[14352]"));
  const auto big = lex_unrank(123456, 12);
  CHECK(Permutation::parse(big.str()) == big);
  CHECK(big.str().find(' ') != std::string::npos);
}

TEST_CASE("invalid permutations are rejected") {
  CHECK_THROWS_AS(Permutation::parse("[1224]"), std::invalid_argument);
  CHECK_THROWS_AS(Permutation::parse("[125]"), std::invalid_argument);
  CHECK_THROWS_AS(Permutation::parse(""), std::invalid_argument);
  CHECK_THROWS_AS(Permutation::parse("[12x]"), std::invalid_argument);
  CHECK_THROWS_AS(Permutation(std::vector<std::uint8_t>{}), std::invalid_argument);
}

TEST_CASE("factorial table") {
  CHECK(factorial(0) == 1);
  CHECK(factorial(12) == 479001600ull);
  CHECK(factorial(20) == 2432902008176640000ull);
  CHECK_THROWS_AS(factorial(21), std::out_of_range);
}

TEST_SUITE_END();
