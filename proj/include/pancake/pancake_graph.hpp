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

#include <algorithm>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <thread>
#include <vector>

#include "pancake/errors.hpp"
#include "pancake/permutation.hpp"

namespace pancake {

// An edge {u, v} of a pancake graph, with v = u * r_generator.
struct Edge {
  Permutation u;
  Permutation v;
  int generator = 0;
};

// Implicit handle on the pancake graph P_n or one of its induced subgraphs:
// an optional restriction of the first element to a set K, and an optional
// fixed last element selecting one hierarchical copy P_{n-1}(j).  Vertices
// are never materialized; everything is generated from prefix reversals.
class PancakeView {
 public:
  static PancakeView full(int n);
  static PancakeView restricted(int n, const std::vector<int>& first_allowed);
  static PancakeView copy_of(int n, int fixed_last);

  int n() const { return n_; }
  bool is_unrestricted() const { return !fixed_last_ && first_mask_ == full_mask(); }
  std::optional<int> fixed_last() const { return fixed_last_; }
  std::vector<int> first_allowed() const;

  std::uint64_t vertex_count() const;
  // Closed form n!(n-1)/2; only defined for the unrestricted view.
  std::uint64_t edge_count() const;

  bool contains(const Permutation& p) const;

  // Largest generator index that can keep a vertex inside the view.
  int max_generator() const { return fixed_last_ ? n_ - 1 : n_; }

  // One edge per generator whose endpoint stays in the view; throws
  // membership_error if p itself is outside.
  std::vector<Edge> neighbors(const Permutation& p) const;

  template <class F>
  void for_each_neighbor(const Permutation& p, F&& f) const {
    require_member(p);
    Permutation q = p;
    for (int i = 2; i <= max_generator(); ++i) {
      if (!allows_first(p.at(i))) continue;
      q = p;
      q.reverse_prefix(i);
      f(static_cast<const Permutation&>(q), i);
    }
  }

  // Visits every member of the view in lexicographic (= rank) order.
  template <class F>
  void for_each_vertex(F&& f) const;

  bool allows_first(int v) const { return (first_mask_ >> (v - 1)) & 1u; }

  void require_member(const Permutation& p) const;
  void require_enumerable() const;

 private:
  PancakeView(int n, std::uint32_t first_mask, std::optional<int> fixed_last);
  std::uint32_t full_mask() const { return (n_ >= 32) ? ~0u : ((1u << n_) - 1); }

  int n_;
  std::uint32_t first_mask_;
  std::optional<int> fixed_last_;
};

// Deletes the entries of p outside K and relabels the survivors through the
// order-preserving bijection K -> [|K|].  Defined only when p_1 is in K; the
// image of an edge of P_{n,K} is then again a prefix-reversal edge.
Permutation project(const Permutation& p, const std::vector<int>& K);

struct StreamStats {
  std::uint64_t edges = 0;
};

namespace detail {

// Splits [0, total) into `parts` contiguous chunks.
std::vector<std::pair<std::uint64_t, std::uint64_t>> rank_partitions(std::uint64_t total, int parts);

}  // namespace detail

// Visits every edge of the view exactly once: the edge {u, v} is emitted only
// from its lexicographically smaller endpoint, which for a prefix reversal
// r_i means p_1 < p_i.  Within a rank partition edges appear in ascending
// order of u with generators ascending.  The Edge passed to the visitor
// references storage reused between calls; copy it to keep it.
//
// With threads > 1 the rank range is split into contiguous partitions that
// are processed concurrently; the visitor must be safe for concurrent
// invocation in that case.
template <class Visitor>
StreamStats stream_edges(const PancakeView& view, Visitor&& visit, int threads = 1) {
  view.require_enumerable();
  const int n = view.n();
  const std::uint64_t total = factorial(n);
  if (threads < 1) threads = 1;
  const auto run_range = [&view, n](std::uint64_t lo, std::uint64_t hi, Visitor& vis) -> std::uint64_t {
    std::uint64_t count = 0;
    if (lo >= hi) return 0;
    Permutation p = lex_unrank(lo, n);
    Edge e{p, p, 0};
    const int max_gen = view.max_generator();
    for (std::uint64_t r = lo; r < hi; ++r) {
      if (view.contains(p)) {
        const int p1 = p.first();
        bool u_copied = false;
        for (int i = 2; i <= max_gen; ++i) {
          const int pi = p.at(i);
          if (pi < p1 || !view.allows_first(pi)) continue;
          if (!u_copied) {
            e.u = p;
            u_copied = true;
          }
          e.v = p;
          e.v.reverse_prefix(i);
          e.generator = i;
          vis(static_cast<const Edge&>(e));
          ++count;
        }
      }
      auto entries = p.entries();
      if (!std::next_permutation(entries.begin(), entries.end())) break;
      p = Permutation(std::move(entries));
    }
    return count;
  };

  StreamStats stats;
  if (threads == 1 || total < 1000) {
    stats.edges = run_range(0, total, visit);
    return stats;
  }
  const auto parts = detail::rank_partitions(total, threads);
  std::vector<std::uint64_t> counts(parts.size(), 0);
  std::vector<std::thread> pool;
  pool.reserve(parts.size());
  for (std::size_t w = 0; w < parts.size(); ++w) {
    pool.emplace_back([&, w] { counts[w] = run_range(parts[w].first, parts[w].second, visit); });
  }
  for (auto& t : pool) t.join();
  for (auto c : counts) stats.edges += c;
  return stats;
}

template <class F>
void PancakeView::for_each_vertex(F&& f) const {
  require_enumerable();
  Permutation p = Permutation::identity(n_);
  const std::uint64_t total = factorial(n_);
  for (std::uint64_t r = 0; r < total; ++r) {
    if (contains(p)) f(static_cast<const Permutation&>(p));
    auto entries = p.entries();
    if (!std::next_permutation(entries.begin(), entries.end())) break;
    p = Permutation(std::move(entries));
  }
}

// Writes the unrestricted view in DIMACS format: "p edge <n!> <n!(n-1)/2>",
// then one "e u v" line per edge with 1-based ids (= lex rank + 1), u < v.
void write_dimacs(std::ostream& os, const PancakeView& view);

}  // namespace pancake
