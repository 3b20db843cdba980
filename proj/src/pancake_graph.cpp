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

#include "pancake/pancake_graph.hpp"

#include <bit>
#include <ostream>
#include <stdexcept>
#include <string>

namespace pancake {

PancakeView::PancakeView(int n, std::uint32_t first_mask, std::optional<int> fixed_last)
    : n_(n), first_mask_(first_mask), fixed_last_(fixed_last) {}

PancakeView PancakeView::full(int n) {
  if (n < 2 || n > kMaxN)
    throw std::invalid_argument("PancakeView: n must be in [2, 20], got " + std::to_string(n));
  return PancakeView(n, (n >= 32) ? ~0u : ((1u << n) - 1), std::nullopt);
}

PancakeView PancakeView::restricted(int n, const std::vector<int>& first_allowed) {
  PancakeView v = full(n);
  if (first_allowed.empty())
    throw std::invalid_argument("PancakeView: restriction set K must be non-empty");
  std::uint32_t mask = 0;
  for (int x : first_allowed) {
    if (x < 1 || x > n)
      throw std::invalid_argument("PancakeView: K element " + std::to_string(x) +
                                  " out of [1, " + std::to_string(n) + "]");
    mask |= 1u << (x - 1);
  }
  v.first_mask_ = mask;
  return v;
}

PancakeView PancakeView::copy_of(int n, int fixed_last) {
  PancakeView v = full(n);
  if (fixed_last < 1 || fixed_last > n)
    throw std::invalid_argument("PancakeView: fixed last element out of [1, n]");
  v.fixed_last_ = fixed_last;
  return v;
}

std::vector<int> PancakeView::first_allowed() const {
  std::vector<int> out;
  for (int v = 1; v <= n_; ++v)
    if (allows_first(v)) out.push_back(v);
  return out;
}

std::uint64_t PancakeView::vertex_count() const {
  if (!fixed_last_) return std::popcount(first_mask_) * factorial(n_ - 1);
  const std::uint32_t mask = first_mask_ & ~(1u << (*fixed_last_ - 1));
  return std::popcount(mask) * factorial(n_ - 2);
}

std::uint64_t PancakeView::edge_count() const {
  if (!is_unrestricted())
    throw std::logic_error("edge_count: closed form only for the unrestricted view");
  return factorial(n_) * (n_ - 1) / 2;
}

bool PancakeView::contains(const Permutation& p) const {
  if (p.size() != n_) return false;
  if (!allows_first(p.first())) return false;
  if (fixed_last_ && p.last() != *fixed_last_) return false;
  return true;
}

void PancakeView::require_member(const Permutation& p) const {
  if (!contains(p))
    throw membership_error("vertex " + p.str() + " is not in the view");
}

void PancakeView::require_enumerable() const {
  if (n_ > kMaxEnumN)
    throw capacity_error("enumeration over P_" + std::to_string(n_) +
                         " exceeds the n <= " + std::to_string(kMaxEnumN) + " bound");
}

std::vector<Edge> PancakeView::neighbors(const Permutation& p) const {
  require_member(p);
  std::vector<Edge> out;
  out.reserve(max_generator() - 1);
  for (int i = 2; i <= max_generator(); ++i) {
    if (!allows_first(p.at(i))) continue;
    out.push_back(Edge{p, apply_reversal(p, i), i});
  }
  return out;
}

Permutation project(const Permutation& p, const std::vector<int>& K) {
  if (K.empty()) throw std::domain_error("project: K must be non-empty");
  const int n = p.size();
  std::uint32_t mask = 0;
  for (int x : K) {
    if (x < 1 || x > n)
      throw std::domain_error("project: K element " + std::to_string(x) + " out of [1, n]");
    mask |= 1u << (x - 1);
  }
  if (!((mask >> (p.first() - 1)) & 1u))
    throw std::domain_error("project: first element " + std::to_string(p.first()) +
                            " of " + p.str() + " is not in K");
  // order-preserving relabeling K -> [|K|]
  std::uint8_t relabel[kMaxN + 1] = {};
  std::uint8_t next = 1;
  for (int v = 1; v <= n; ++v)
    if ((mask >> (v - 1)) & 1u) relabel[v] = next++;
  std::vector<std::uint8_t> out;
  out.reserve(std::popcount(mask));
  for (std::uint8_t v : p.entries())
    if ((mask >> (v - 1)) & 1u) out.push_back(relabel[v]);
  return Permutation(std::move(out));
}

namespace detail {

std::vector<std::pair<std::uint64_t, std::uint64_t>> rank_partitions(std::uint64_t total, int parts) {
  std::vector<std::pair<std::uint64_t, std::uint64_t>> out;
  if (parts < 1) parts = 1;
  const std::uint64_t chunk = total / parts;
  const std::uint64_t rem = total % parts;
  std::uint64_t lo = 0;
  for (int w = 0; w < parts; ++w) {
    const std::uint64_t hi = lo + chunk + (static_cast<std::uint64_t>(w) < rem ? 1 : 0);
    out.emplace_back(lo, hi);
    lo = hi;
  }
  return out;
}

}  // namespace detail

void write_dimacs(std::ostream& os, const PancakeView& view) {
  if (!view.is_unrestricted())
    throw std::logic_error("write_dimacs: only the unrestricted view is exported");
  view.require_enumerable();
  os << "p edge " << view.vertex_count() << ' ' << view.edge_count() << '\n';
  stream_edges(view, [&os](const Edge& e) {
    os << "e " << (lex_rank(e.u) + 1) << ' ' << (lex_rank(e.v) + 1) << '\n';
  });
}

}  // namespace pancake
