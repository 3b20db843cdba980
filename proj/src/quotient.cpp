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

#include "pancake/quotient.hpp"

#include <ostream>
#include <stdexcept>
#include <string>

namespace pancake {

namespace {

void check_pair(const char* who, int n, int i, int j) {
  if (i < 1 || i > n || j < 1 || j > n) {
    throw std::invalid_argument(std::string(who) + ": pair (" + std::to_string(i) + ", " +
                                std::to_string(j) + ") outside [1, " + std::to_string(n) + "]^2");
  }
  if (i == j) {
    throw std::invalid_argument(std::string(who) + ": first and last element coincide (i = j = " +
                                std::to_string(i) + ")");
  }
}

}  // namespace

QuotientGraph::QuotientGraph(int n) : n_(n) {}

QuotientGraph QuotientGraph::build(int n) {
  if (n < 3) {
    throw std::invalid_argument("QuotientGraph::build: n must be at least 3, got " +
                                std::to_string(n));
  }
  QuotientGraph q(n);
  q.vertices_.reserve(static_cast<std::size_t>(q.order()));
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= n; ++j) {
      if (i != j) q.vertices_.push_back({i, j});
    }
  }
  q.adj_.resize(q.vertices_.size());
  for (int a = 0; a < q.order(); ++a) {
    const auto [i, j] = q.vertices_[a];
    auto& nbrs = q.adj_[a];
    nbrs.reserve(static_cast<std::size_t>(n - 1));
    // (A1): the clique of all sets with the same last element.
    for (int i2 = 1; i2 <= n; ++i2) {
      if (i2 != i && i2 != j) nbrs.push_back(q.index_of(i2, j));
    }
    // (A2): the swap partner.
    nbrs.push_back(q.index_of(j, i));
  }
  return q;
}

std::uint64_t QuotientGraph::edge_count() const {
  return static_cast<std::uint64_t>(order()) * static_cast<std::uint64_t>(n_ - 1) / 2;
}

int QuotientGraph::index_of(int i, int j) const {
  check_pair("QuotientGraph::index_of", n_, i, j);
  return (i - 1) * (n_ - 1) + (j - 1) - (j > i ? 1 : 0);
}

bool QuotientGraph::adjacent(int a, int b) const {
  const auto [i, j] = vertices_[a];
  const auto [i2, j2] = vertices_[b];
  return (j == j2 && i != i2) || (i == j2 && j == i2);
}

int f_value(int n, int i, int j) {
  check_pair("f_value", n, i, j);
  return i > j ? i - j : n + i - j;
}

int c_value(int n, int i, int j) {
  const int f = f_value(n, i, j);
  // j > n/2 and f = n/2 (resp. n/2 + 1), compared as doubled integers; for
  // odd n neither equality can hold.
  if (2 * j > n) {
    if (2 * f == n) return f + 1;
    if (2 * f == n + 2) return f - 1;
  }
  return f;
}

std::vector<int> quotient_coloring(int n) {
  const QuotientGraph q = QuotientGraph::build(n);
  std::vector<int> colors(static_cast<std::size_t>(q.order()));
  for (int a = 0; a < q.order(); ++a) {
    const auto [i, j] = q.vertex(a);
    colors[static_cast<std::size_t>(a)] = c_value(n, i, j);
  }
  return colors;
}

bool quotient_coloring_proper(int n) {
  if (n < 3) {
    throw std::invalid_argument("quotient_coloring_proper: n must be at least 3, got " +
                                std::to_string(n));
  }
  // (A1): within a fixed last element, the n - 1 colors must be pairwise
  // distinct, i.e. a permutation of [n-1].
  std::vector<char> seen(static_cast<std::size_t>(n), 0);
  for (int j = 1; j <= n; ++j) {
    std::fill(seen.begin(), seen.end(), 0);
    for (int i = 1; i <= n; ++i) {
      if (i == j) continue;
      const int c = c_value(n, i, j);
      if (c < 1 || c > n - 1 || seen[static_cast<std::size_t>(c)]) return false;
      seen[static_cast<std::size_t>(c)] = 1;
    }
  }
  // (A2): swap partners disagree.
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j < i; ++j) {
      if (c_value(n, i, j) == c_value(n, j, i)) return false;
    }
  }
  return true;
}

Coloring lifted_coloring(int n) {
  if (n < 3) {
    throw std::invalid_argument("lifted_coloring: n must be at least 3, got " + std::to_string(n));
  }
  return Coloring(
      n, n - 1, [n](const Permutation& p) { return c_value(n, p.first(), p.last()); },
      "equitable-nm1");
}

std::vector<QuotientVertex> figure_cycle_order(int n) {
  if (n < 3) {
    throw std::invalid_argument("figure_cycle_order: n must be at least 3, got " +
                                std::to_string(n));
  }
  std::vector<QuotientVertex> order;
  order.reserve(static_cast<std::size_t>(n) * (n - 1));
  for (int j = n; j >= 1; --j) {
    int i = j % n + 1;
    for (int step = 0; step < n - 1; ++step) {
      order.push_back({i, j});
      i = i % n + 1;
      if (i == j) i = i % n + 1;
    }
  }
  return order;
}

void write_quotient_dimacs(std::ostream& os, const QuotientGraph& q) {
  os << "p edge " << q.order() << ' ' << q.edge_count() << '\n';
  for (int a = 0; a < q.order(); ++a) {
    for (int b : q.adj(a)) {
      if (b > a) os << "e " << a + 1 << ' ' << b + 1 << '\n';
    }
  }
}

}  // namespace pancake
