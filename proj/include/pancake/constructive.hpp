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

#include <map>
#include <vector>

#include "pancake/coloring.hpp"
#include "pancake/permutation.hpp"

namespace pancake {

// Where a vertex sits on its (r_5 r_4)-cycle: the subgraph spanned by the
// r_4 and r_5 edges decomposes into disjoint 10-cycles, because (r_5 r_4)
// has order 5 and both generators are involutions.  The representative is
// the lexicographically smallest of the ten vertices; the distance counts
// steps from it along the traversal that applies r_5 first.
struct CyclePosition {
  Permutation representative;
  int distance = 0;  // in [0, 9]
};

// Requires n >= 5 (r_5 must exist); throws std::invalid_argument otherwise.
CyclePosition cycle_position(const Permutation& p);

// The ten vertices of p's cycle starting at p, alternating r_5, r_4.
std::vector<Permutation> cycle_vertices(const Permutation& p);

// The parity-based optimal 4-coloring of P_5, P_6, P_7: even permutations
// get colors {1, 2}, odd ones {3, 4}, picked by distance parity on the
// vertex's 10-cycle.  Proper because 10-cycle neighbors alternate distance
// parity while every other edge (an odd reversal) flips permutation parity.
// For n >= 8 the argument breaks down (r_8 and r_9 are even reversals), so
// n outside {5, 6, 7} throws std::invalid_argument.
int parity4_color(const Permutation& p);

// parity4_color packaged as a Coloring named "parity4".
Coloring parity4_coloring(int n);

// An ordered partition of [n] into consecutive blocks, by size; sizes must
// be positive and sum to n.
struct BlockScheme {
  std::vector<int> sizes;
  int n() const;
};

// Extra base colorings by block size (e.g. a solver-found table for size 8
// or 9); built-in bases cover sizes 1 through 7.
using BaseRegistry = std::map<int, Coloring>;

// The base coloring used for a block of the given size: constant for 1,
// permutation parity for 2 and 3, the frozen optimal 3-coloring table for 4,
// the parity 4-coloring for 5-7.  Other sizes must come from the registry.
Coloring base_coloring(int size, const BaseRegistry* extra = nullptr);

// The subadditive composition: a vertex is colored by locating the block
// holding its first element, projecting onto that block's symbols, and
// applying the block's base coloring shifted by the total color count of all
// earlier blocks.  Total colors = sum of block base color counts.
Coloring compose(const BlockScheme& scheme, const BaseRegistry* extra = nullptr);

}  // namespace pancake
