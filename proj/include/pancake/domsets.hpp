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

#include <cstdint>
#include <optional>
#include <vector>

#include "pancake/pancake_graph.hpp"
#include "pancake/permutation.hpp"

namespace pancake {

// Names one of the canonical efficient dominating sets of P_n: D_i is every
// permutation with first element i; with `last` present, D_i^j additionally
// fixes the last element to j.
struct DomSetId {
  int first = 1;
  std::optional<int> last;
};

// The named set as a rank-sorted sequence (canonical, diffable output).
// |D_i| = (n-1)!, |D_i^j| = (n-2)!.  Throws std::invalid_argument when
// first == last or either index is outside [n]; requires n >= 3.
std::vector<Permutation> dom_set(int n, const DomSetId& id);

// Certificate produced by is_efficient_dominating.  When `efficient` is
// false, exactly one witness is populated: either a member of S adjacent to
// another member (independence failure) or a vertex outside S whose number
// of neighbors inside S differs from one.
struct DominationReport {
  bool efficient = false;
  bool independent = false;
  std::optional<Permutation> witness;
  // Dominator count of the witness (meaningful for domination failures).
  int witness_neighbors_in_set = 0;
};

// True iff S is independent and every vertex of the view outside S has
// exactly one neighbor in S, with edges taken inside the view (a copy view
// only sees its internal generators).  Every member of S must belong to the
// view; n above 10 raises capacity_error.
DominationReport is_efficient_dominating(const PancakeView& view, const std::vector<Permutation>& S);

// Result of verifying that {D_i^j : i != j} partitions Sym_n.
struct PartitionReport {
  bool ok = false;
  int parts = 0;
  std::uint64_t part_size = 0;  // (n-2)!
};

// Checks by full enumeration that the n(n-1) sets D_i^j are pairwise
// disjoint, cover Sym_n, all have (n-2)! elements, and that for each i the
// union over j recovers D_i.  Requires 3 <= n <= 10.
PartitionReport partition_check(int n);

}  // namespace pancake
