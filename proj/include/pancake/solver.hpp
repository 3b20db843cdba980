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
#include <span>
#include <vector>

#include "pancake/coloring.hpp"
#include "pancake/pancake_graph.hpp"

namespace pancake {

// Compressed adjacency used by the search code; vertex ids are the
// lexicographic enumeration positions of the view members.
struct SolverGraph {
  std::vector<std::int32_t> offsets;    // size order + 1
  std::vector<std::int32_t> neighbors;  // size 2 * edges

  int order() const { return static_cast<int>(offsets.size()) - 1; }
  std::uint64_t edge_count() const { return neighbors.size() / 2; }
  std::span<const std::int32_t> adj(int v) const {
    return {neighbors.data() + offsets[v], neighbors.data() + offsets[v + 1]};
  }

  static SolverGraph from_edges(int order, const std::vector<std::pair<int, int>>& edges);
  // Neighbor lists follow generator order, so adj(identity)[0] is the r_2
  // image used for symmetry breaking.
  static SolverGraph from_view(const PancakeView& view);
};

struct SearchBudget {
  double max_seconds = 600.0;
  std::uint64_t max_nodes = UINT64_MAX;  // decision nodes (complete) or moves (tabu)
  std::uint32_t seed = 1;
};

enum class SolveStatus : std::uint8_t { colored, unsat, timeout };

struct SolveOutcome {
  SolveStatus status = SolveStatus::timeout;
  std::optional<std::vector<std::uint8_t>> assignment;  // colors 1..k by vertex id
  std::uint64_t nodes = 0;
  double elapsed_seconds = 0.0;
};

enum class SolveMode : std::uint8_t { automatic, complete, heuristic };

// Backtracking with color-domain propagation, saturation-first branching,
// symmetry breaking (vertex 0 gets color 1, its first neighbor color 2) and
// postponement of vertices that are always colorable last.  Deterministic.
SolveOutcome find_k_coloring_complete(const SolverGraph& g, int k, const SearchBudget& budget);

// Tabu-style min-conflicts local search.  Never reports unsat.  When
// `workers` > 1, independently seeded runs (seed, seed+1, ...) execute in
// parallel and the successful run with the lowest seed wins.
SolveOutcome find_k_coloring_tabu(const SolverGraph& g, int k, const SearchBudget& budget,
                                  const std::vector<std::uint8_t>* initial = nullptr,
                                  int workers = 1);

struct ViewSolveOutcome {
  SolveStatus status = SolveStatus::timeout;
  std::optional<Coloring> coloring;
  std::uint64_t nodes = 0;
  double elapsed_seconds = 0.0;
};

// View-level entry point.  Complete mode is capped at 5040 vertices,
// heuristic mode at 10!.  A colored outcome is re-verified with
// verify_proper before it is returned.  `initial` seeds the heuristic
// search (colors above k fall back to 1); complete mode ignores it.
ViewSolveOutcome find_k_coloring(const PancakeView& view, int k, const SearchBudget& budget,
                                 SolveMode mode = SolveMode::automatic, int workers = 1,
                                 const Coloring* initial = nullptr);

struct ChiResult {
  bool decided = false;
  int lower = 0;                  // best proven lower bound
  int upper = 0;                  // best witnessed upper bound
  std::optional<int> chi;         // set when decided
  std::optional<Coloring> witness;
  std::uint64_t nodes = 0;
  double elapsed_seconds = 0.0;
};

// Smallest k admitting a proper coloring, with an unsat proof for k-1.
// The lower bound is seeded from the bipartiteness test; on timeout the
// partial result keeps the best proven lower bound and upper witness.
ChiResult exact_chi(const PancakeView& view, const SearchBudget& budget);

struct GraphChiResult {
  bool decided = false;
  int lower = 0;
  int upper = 0;
  std::optional<int> chi;
  std::optional<std::vector<std::uint8_t>> witness;
  std::uint64_t nodes = 0;
  double elapsed_seconds = 0.0;
};

GraphChiResult exact_chi(const SolverGraph& g, const SearchBudget& budget);

struct BipartiteResult {
  bool bipartite = false;
  std::vector<int> odd_cycle;  // vertex ids of a simple odd cycle when not bipartite
};

BipartiteResult is_bipartite(const SolverGraph& g);

struct ViewBipartiteResult {
  bool bipartite = false;
  std::vector<Permutation> odd_cycle;
};

ViewBipartiteResult is_bipartite(const PancakeView& view);

// Exhaustive oracle for solver validation; rejects graphs above 10 vertices.
int brute_force_chi(const SolverGraph& g);

}  // namespace pancake
