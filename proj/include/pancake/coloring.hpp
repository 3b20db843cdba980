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
#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

#include "pancake/pancake_graph.hpp"
#include "pancake/permutation.hpp"

namespace pancake {

enum class ColoringKind : std::uint8_t { functional, tabular };

// A total map from the vertices of P_n to colors 1..k, backed either by a
// closed-form rule or by a table indexed by lexicographic rank.
class Coloring {
 public:
  Coloring(int n, int k, std::function<int(const Permutation&)> rule, std::string name = "");
  static Coloring tabular(int n, int k, std::vector<std::uint8_t> table, std::string name = "");

  int n() const { return n_; }
  int k() const { return k_; }
  ColoringKind kind() const { return kind_; }
  const std::string& name() const { return name_; }

  int color_of(const Permutation& p) const {
    if (kind_ == ColoringKind::tabular) return table_[lex_rank(p)];
    return rule_(p);
  }

  // Materializes the rule into a rank-indexed table.
  Coloring to_tabular() const;

  const std::vector<std::uint8_t>& table() const { return table_; }

 private:
  Coloring() = default;
  int n_ = 0;
  int k_ = 0;
  ColoringKind kind_ = ColoringKind::functional;
  std::function<int(const Permutation&)> rule_;
  std::vector<std::uint8_t> table_;
  std::string name_;
};

// Result of a coloring verification pass.  class_sizes always sums to the
// vertex count of the verified view; witness lists are capped at 10 entries
// while counts stay exact.
struct VerifyReport {
  std::uint64_t vertices = 0;
  std::uint64_t edges = 0;

  bool proper = false;
  std::uint64_t violations = 0;
  std::vector<Edge> violation_witnesses;

  std::vector<std::uint64_t> class_sizes;
  bool equitable = false;
  bool strongly_equitable = false;

  bool perfect_checked = false;
  bool perfect = false;
  // When not perfect: two vertices of equal color whose neighbor-color
  // multisets differ.
  std::vector<Permutation> perfect_witnesses;
};

// No monochromatic edge.  Each edge is checked once (emitted from its
// lexicographically smaller endpoint); witnesses are merged deterministically
// from the lowest rank ranges regardless of the thread count.
VerifyReport verify_proper(const PancakeView& view, const Coloring& coloring, int threads = 1);

// verify_proper plus the class-size balance flags: equitable when the largest
// and smallest class differ by at most one, strongly equitable when all
// classes are exactly equal.
VerifyReport verify_equitable(const PancakeView& view, const Coloring& coloring, int threads = 1);

// Checks that the multiset of neighbor colors depends only on the vertex's
// own color.  Reference multisets are accumulated per color (memory O(k*n)),
// with the first vertex of each color in rank order as the reference.
VerifyReport verify_perfect(const PancakeView& view, const Coloring& coloring);

// Coloring file format: header "pancake-coloring n=<n> k=<k>", then n! lines
// "<rank> <color>" with ranks ascending and colors in 1..k.
void write_coloring(std::ostream& os, const Coloring& coloring);
Coloring read_coloring(std::istream& is, const std::string& name = "");

}  // namespace pancake
