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
#include <random>
#include <sstream>

#include "pancake/coloring.hpp"

using namespace pancake;

namespace {

Coloring parity_coloring(int n) {
  return Coloring(n, 2, [](const Permutation& p) { return parity(p) == Parity::even ? 1 : 2; },
                  "parity2");
}

Coloring first_element_coloring(int n) {
  return Coloring(n, n, [](const Permutation& p) { return p.first(); }, "first-element");
}

// Naive oracle: materialize the graph and double-loop over all vertex pairs.
std::pair<bool, std::uint64_t> naive_properness(const PancakeView& view, const Coloring& c) {
  std::vector<Permutation> verts;
  view.for_each_vertex([&](const Permutation& p) { verts.push_back(p); });
  std::uint64_t bad = 0;
  for (std::size_t a = 0; a < verts.size(); ++a) {
    for (std::size_t b = a + 1; b < verts.size(); ++b) {
      bool adjacent = false;
      for (const auto& e : view.neighbors(verts[a]))
        if (e.v == verts[b]) adjacent = true;
      if (adjacent && c.color_of(verts[a]) == c.color_of(verts[b])) ++bad;
    }
  }
  return {bad == 0, bad};
}

}  // namespace

TEST_SUITE_BEGIN("coloring");

TEST_CASE("parity 2-coloring of P_3 is proper (C_6 bipartition)") {
  const auto rep = verify_proper(PancakeView::full(3), parity_coloring(3));
  CHECK(rep.proper);
  CHECK(rep.vertices == 6);
  CHECK(rep.edges == 6);
  CHECK(rep.class_sizes == std::vector<std::uint64_t>{3, 3});
}

TEST_CASE("constant coloring of P_4 violates every edge") {
  const Coloring constant(4, 1, [](const Permutation&) { return 1; }, "constant");
  const auto rep = verify_proper(PancakeView::full(4), constant);
  CHECK_FALSE(rep.proper);
  CHECK(rep.violations == 36);
  CHECK(rep.violation_witnesses.size() == 10);  // capped, count exact
  for (const auto& e : rep.violation_witnesses) CHECK(apply_reversal(e.u, e.generator) == e.v);
}

TEST_CASE("verifier agrees with the naive double-loop oracle") {
  std::mt19937 rng(31);
  for (int n = 3; n <= 5; ++n) {
    const auto view = PancakeView::full(n);
    for (int trial = 0; trial < 6; ++trial) {
      const int k = 1 + int(rng() % 4);
      std::vector<std::uint8_t> table(factorial(n));
      for (auto& c : table) c = std::uint8_t(1 + rng() % k);
      const auto coloring = Coloring::tabular(n, k, std::move(table));
      const auto rep = verify_proper(view, coloring);
      const auto [ok, bad] = naive_properness(view, coloring);
      CHECK(rep.proper == ok);
      CHECK(rep.violations == bad);
    }
  }
}

TEST_CASE("functional and tabular representations verify identically") {
  for (int n = 3; n <= 6; ++n) {
    const auto view = PancakeView::full(n);
    const auto functional = parity_coloring(n);
    const auto tabular = functional.to_tabular();
    const auto a = verify_equitable(view, functional);
    const auto b = verify_equitable(view, tabular);
    CHECK(a.proper == b.proper);
    CHECK(a.violations == b.violations);
    CHECK(a.class_sizes == b.class_sizes);
    CHECK(a.equitable == b.equitable);
    CHECK(a.strongly_equitable == b.strongly_equitable);
  }
}

TEST_CASE("unbalanced classes are flagged") {
  // P_3 with classes of sizes 5 and 1
  std::vector<std::uint8_t> table{2, 1, 1, 1, 1, 1};
  const auto coloring = Coloring::tabular(3, 2, std::move(table));
  const auto rep = verify_equitable(PancakeView::full(3), coloring);
  CHECK_FALSE(rep.equitable);
  CHECK(rep.class_sizes == std::vector<std::uint64_t>{5, 1});
}

TEST_CASE("first-element coloring is proper, strongly equitable and perfect") {
  for (int n = 3; n <= 8; ++n) {
    const auto rep = verify_perfect(PancakeView::full(n), first_element_coloring(n));
    CHECK(rep.proper);
    CHECK(rep.equitable);
    CHECK(rep.strongly_equitable);
    CHECK(rep.perfect);
    for (auto s : rep.class_sizes) CHECK(s == factorial(n - 1));
  }
}

TEST_CASE("parity coloring of P_4 is not proper but is perfect") {
  // r_4 preserves parity, so parity classes are not independent in P_4; the
  // neighbor multisets still only depend on the class.
  const auto rep = verify_perfect(PancakeView::full(4), parity_coloring(4));
  CHECK_FALSE(rep.proper);
  CHECK(rep.perfect);
}

TEST_CASE("a locally damaged coloring loses perfection with witnesses") {
  auto tab = first_element_coloring(4).to_tabular().table();
  tab[5] = (tab[5] == 1) ? 2 : 1;
  const auto coloring = Coloring::tabular(4, 4, std::move(tab));
  const auto rep = verify_perfect(PancakeView::full(4), coloring);
  CHECK_FALSE(rep.perfect);
  REQUIRE(rep.perfect_witnesses.size() == 2);
  const auto& a = rep.perfect_witnesses[0];
  const auto& b = rep.perfect_witnesses[1];
  CHECK(coloring.color_of(a) == coloring.color_of(b));
}

TEST_CASE("verification is independent of the worker count") {
  const auto view = PancakeView::full(7);
  const auto coloring = parity_coloring(7);  // improper: r_4, r_5 edges collide
  const auto serial = verify_proper(view, coloring, 1);
  const auto parallel = verify_proper(view, coloring, 4);
  CHECK(serial.violations == parallel.violations);
  CHECK(serial.class_sizes == parallel.class_sizes);
  REQUIRE(serial.violation_witnesses.size() == parallel.violation_witnesses.size());
  for (std::size_t i = 0; i < serial.violation_witnesses.size(); ++i) {
    CHECK(serial.violation_witnesses[i].u == parallel.violation_witnesses[i].u);
    CHECK(serial.violation_witnesses[i].v == parallel.violation_witnesses[i].v);
  }
}

TEST_CASE("coloring file round trip") {
  const auto original = parity_coloring(4).to_tabular();
  std::ostringstream os;
  write_coloring(os, original);
  CHECK(os.str().rfind("pancake-coloring n=4 k=2\n", 0) == 0);
  std::istringstream is(os.str());
  const auto loaded = read_coloring(is, "roundtrip");
  CHECK(loaded.n() == 4);
  CHECK(loaded.k() == 2);
  CHECK(loaded.table() == original.table());
}

TEST_CASE("malformed coloring files are rejected") {
  {
    std::istringstream is("nonsense\n0 1\n");
    CHECK_THROWS_AS(read_coloring(is), std::runtime_error);
  }
  {
    std::istringstream is("pancake-coloring n=3 k=2\n0 1\n2 1\n");  // rank gap
    CHECK_THROWS_AS(read_coloring(is), std::runtime_error);
  }
  {
    std::istringstream is("pancake-coloring n=3 k=2\n0 1\n1 5\n");  // color out of range
    CHECK_THROWS_AS(read_coloring(is), std::runtime_error);
  }
  {
    std::istringstream is("pancake-coloring n=3 k=2\n0 1\n1 2\n");  // short file
    CHECK_THROWS_AS(read_coloring(is), std::runtime_error);
  }
}

TEST_CASE("verify rejects mismatched dimensions and oversized graphs") {
  CHECK_THROWS_AS(verify_proper(PancakeView::full(4), parity_coloring(5)), std::invalid_argument);
  CHECK_THROWS_AS(verify_proper(PancakeView::full(13), parity_coloring(13)), std::invalid_argument);
}

TEST_SUITE_END();
