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

#include "pancake/domsets.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "pancake/errors.hpp"

namespace pancake {

namespace {

void check_id(int n, const DomSetId& id) {
  if (n < 3) throw std::invalid_argument("dom_set: n must be at least 3, got " + std::to_string(n));
  if (n > kMaxEnumN) {
    throw capacity_error("dom_set: enumeration is capped at n = " + std::to_string(kMaxEnumN));
  }
  if (id.first < 1 || id.first > n) {
    throw std::invalid_argument("dom_set: first element " + std::to_string(id.first) +
                                " outside [1, " + std::to_string(n) + "]");
  }
  if (id.last) {
    if (*id.last < 1 || *id.last > n) {
      throw std::invalid_argument("dom_set: last element " + std::to_string(*id.last) +
                                  " outside [1, " + std::to_string(n) + "]");
    }
    if (*id.last == id.first) {
      throw std::invalid_argument(
          "dom_set: first and last element coincide (i = j = " + std::to_string(id.first) +
          "); a permutation cannot start and end with the same symbol");
    }
  }
}

}  // namespace

std::vector<Permutation> dom_set(int n, const DomSetId& id) {
  check_id(n, id);
  std::vector<Permutation> out;
  out.reserve(id.last ? factorial(n - 2) : factorial(n - 1));
  // Enumerating the middle entries in lexicographic order yields the members
  // in ascending rank order because the fixed prefix (and suffix) never
  // changes.
  std::vector<std::uint8_t> middle;
  middle.reserve(n);
  for (int v = 1; v <= n; ++v) {
    if (v == id.first) continue;
    if (id.last && v == *id.last) continue;
    middle.push_back(static_cast<std::uint8_t>(v));
  }
  std::sort(middle.begin(), middle.end());
  do {
    std::vector<std::uint8_t> entries;
    entries.reserve(n);
    entries.push_back(static_cast<std::uint8_t>(id.first));
    entries.insert(entries.end(), middle.begin(), middle.end());
    if (id.last) entries.push_back(static_cast<std::uint8_t>(*id.last));
    out.emplace_back(std::move(entries));
  } while (std::next_permutation(middle.begin(), middle.end()));
  return out;
}

DominationReport is_efficient_dominating(const PancakeView& view, const std::vector<Permutation>& S) {
  const int n = view.n();
  if (n > 10) {
    throw capacity_error("is_efficient_dominating: domination scan is capped at n = 10, got n = " +
                         std::to_string(n));
  }
  std::vector<std::uint8_t> in_set(factorial(n), 0);
  for (const Permutation& p : S) {
    view.require_member(p);
    in_set[lex_rank(p)] = 1;
  }

  DominationReport report;
  report.independent = true;
  report.efficient = true;
  view.for_each_vertex([&](const Permutation& p) {
    if (!report.efficient) return;
    int dominators = 0;
    view.for_each_neighbor(p, [&](const Permutation& q, int) {
      if (in_set[lex_rank(q)]) ++dominators;
    });
    if (in_set[lex_rank(p)]) {
      if (dominators > 0) {
        report.efficient = false;
        report.independent = false;
        report.witness = p;
        report.witness_neighbors_in_set = dominators;
      }
    } else if (dominators != 1) {
      report.efficient = false;
      report.witness = p;
      report.witness_neighbors_in_set = dominators;
    }
  });
  return report;
}

PartitionReport partition_check(int n) {
  if (n < 3 || n > 10) {
    throw std::invalid_argument("partition_check: n must be in [3, 10], got " + std::to_string(n));
  }
  PartitionReport report;
  report.parts = n * (n - 1);
  report.part_size = factorial(n - 2);

  // covered[r] counts how many sets claim the permutation of rank r; a
  // partition claims every permutation exactly once.
  std::vector<std::uint32_t> covered(factorial(n), 0);
  std::uint64_t union_mismatch = 0;
  for (int i = 1; i <= n; ++i) {
    // Union over j of D_i^j must recover D_i.
    std::vector<std::uint8_t> in_union(factorial(n), 0);
    for (int j = 1; j <= n; ++j) {
      if (j == i) continue;
      const std::vector<Permutation> part = dom_set(n, {i, j});
      if (part.size() != report.part_size) {
        report.ok = false;
        return report;
      }
      for (const Permutation& p : part) {
        const Rank r = lex_rank(p);
        ++covered[r];
        in_union[r] = 1;
      }
    }
    for (const Permutation& p : dom_set(n, {i, std::nullopt})) {
      if (!in_union[lex_rank(p)]) ++union_mismatch;
    }
  }
  report.ok = union_mismatch == 0 &&
              std::all_of(covered.begin(), covered.end(), [](std::uint32_t c) { return c == 1; });
  return report;
}

}  // namespace pancake
