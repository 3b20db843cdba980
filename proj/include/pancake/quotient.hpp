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
#include <iosfwd>
#include <vector>

#include "pancake/coloring.hpp"

namespace pancake {

// A vertex of the quotient graph: the set D_i^j of permutations that start
// with i and end with j.
struct QuotientVertex {
  int i = 0;
  int j = 0;
  friend bool operator==(const QuotientVertex&, const QuotientVertex&) = default;
};

// The graph on the n(n-1) sets D_i^j.  Two vertices are adjacent iff some
// permutation of one is adjacent to some permutation of the other in P_n,
// which reduces to exactly two rules:
//   (A1) same last element, different first element (an (n-1)-clique per j);
//   (A2) the swap partner: (i, j) ~ (j, i).
// The graph is therefore (n-1)-regular with n(n-1)^2/2 edges.
class QuotientGraph {
 public:
  static QuotientGraph build(int n);  // n >= 3, else std::invalid_argument

  int n() const { return n_; }
  int order() const { return n_ * (n_ - 1); }
  std::uint64_t edge_count() const;

  // Vertices are indexed by (i, j) in lexicographic order of the pair.
  int index_of(int i, int j) const;
  QuotientVertex vertex(int index) const { return vertices_[index]; }
  const std::vector<int>& adj(int index) const { return adj_[index]; }
  bool adjacent(int a, int b) const;

 private:
  explicit QuotientGraph(int n);
  int n_ = 0;
  std::vector<QuotientVertex> vertices_;
  std::vector<std::vector<int>> adj_;
};

// The base labeling f(D_i^j) = i - j when i > j, n + i - j otherwise; values
// lie in [1, n-1].  Throws std::invalid_argument when i == j or an index is
// outside [n].
int f_value(int n, int i, int j);

// f with the boundary correction: for even n with half point k = n/2, a +1
// shift when j > k and f = k, a -1 shift when j > k and f = k + 1.  The
// comparisons are carried out on doubled integers (2f vs n), never on
// floating point, so odd n is exactly the no-correction case.
int c_value(int n, int i, int j);

// c as a coloring of the quotient graph itself, indexed like build(n).
std::vector<int> quotient_coloring(int n);

// Direct O(n^2) properness check of c on Q_n: injectivity within every
// last-element clique plus c(i,j) != c(j,i) for every swap pair.
bool quotient_coloring_proper(int n);

// The lifted coloring of P_n: pi gets the color of the unique D_i^j that
// contains it, i.e. c_value(n, pi_1, pi_n).  Uses exactly n - 1 colors, and
// every class has n(n-2)! members.
Coloring lifted_coloring(int n);

// The Hamiltonian ordering of Q_n used by the figure-style layouts: vertices
// grouped by last element j = n, n-1, ..., 1; inside the group for j the
// first elements start at j + 1 (wrapping past n to 1) and increment
// cyclically, skipping j.  Consecutive vertices are adjacent, as are the
// first, (1, n), and the last, (n, 1).
std::vector<QuotientVertex> figure_cycle_order(int n);

// Emits Q_n in DIMACS format ("p edge V E" then "e u v" with 1-based ids in
// index order, u < v).
void write_quotient_dimacs(std::ostream& os, const QuotientGraph& q);

}  // namespace pancake
