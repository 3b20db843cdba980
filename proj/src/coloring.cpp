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

#include "pancake/coloring.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace pancake {

namespace {

constexpr std::size_t kWitnessCap = 10;

void check_dimensions(int n, int k) {
  if (n < 1 || n > kMaxEnumN)
    throw std::invalid_argument("Coloring: n must be in [1, " + std::to_string(kMaxEnumN) + "]");
  if (k < 1 || k > 255)
    throw std::invalid_argument("Coloring: k must be in [1, 255], got " + std::to_string(k));
}

}  // namespace

Coloring::Coloring(int n, int k, std::function<int(const Permutation&)> rule, std::string name)
    : n_(n), k_(k), kind_(ColoringKind::functional), rule_(std::move(rule)), name_(std::move(name)) {
  check_dimensions(n, k);
  if (!rule_) throw std::invalid_argument("Coloring: null rule");
}

Coloring Coloring::tabular(int n, int k, std::vector<std::uint8_t> table, std::string name) {
  check_dimensions(n, k);
  if (table.size() != factorial(n))
    throw std::invalid_argument("Coloring: table length " + std::to_string(table.size()) +
                                " != n! = " + std::to_string(factorial(n)));
  for (std::uint8_t c : table)
    if (c < 1 || c > k)
      throw std::invalid_argument("Coloring: table color " + std::to_string(int(c)) +
                                  " out of [1, " + std::to_string(k) + "]");
  Coloring out;
  out.n_ = n;
  out.k_ = k;
  out.kind_ = ColoringKind::tabular;
  out.table_ = std::move(table);
  out.name_ = std::move(name);
  return out;
}

Coloring Coloring::to_tabular() const {
  if (kind_ == ColoringKind::tabular) return *this;
  const std::uint64_t total = factorial(n_);
  std::vector<std::uint8_t> table(total);
  Permutation p = Permutation::identity(n_);
  for (std::uint64_t r = 0; r < total; ++r) {
    table[r] = static_cast<std::uint8_t>(rule_(p));
    auto entries = p.entries();
    if (!std::next_permutation(entries.begin(), entries.end())) break;
    p = Permutation(std::move(entries));
  }
  return tabular(n_, k_, std::move(table), name_);
}

namespace {

struct WorkerReport {
  std::uint64_t vertices = 0;
  std::uint64_t edges = 0;
  std::uint64_t violations = 0;
  std::vector<Edge> witnesses;
  std::vector<std::uint64_t> class_sizes;
};

// One pass over a contiguous rank range: counts class sizes per vertex and
// checks every edge emitted from its lex-smaller endpoint.
WorkerReport scan_range(const PancakeView& view, const Coloring& coloring,
                        std::uint64_t lo, std::uint64_t hi) {
  WorkerReport rep;
  rep.class_sizes.assign(coloring.k() + 1, 0);
  if (lo >= hi) return rep;
  const int n = view.n();
  const int max_gen = view.max_generator();
  Permutation p = lex_unrank(lo, n);
  Permutation q = p;
  for (std::uint64_t r = lo; r < hi; ++r) {
    if (view.contains(p)) {
      const int cu = coloring.color_of(p);
      rep.class_sizes[cu] += 1;
      rep.vertices += 1;
      const int p1 = p.first();
      for (int i = 2; i <= max_gen; ++i) {
        const int pi = p.at(i);
        if (pi < p1 || !view.allows_first(pi)) continue;
        q = p;
        q.reverse_prefix(i);
        rep.edges += 1;
        if (coloring.color_of(q) == cu) {
          rep.violations += 1;
          if (rep.witnesses.size() < kWitnessCap) rep.witnesses.push_back(Edge{p, q, i});
        }
      }
    }
    auto entries = p.entries();
    if (!std::next_permutation(entries.begin(), entries.end())) break;
    p = Permutation(std::move(entries));
  }
  return rep;
}

VerifyReport verify_with_classes(const PancakeView& view, const Coloring& coloring, int threads) {
  view.require_enumerable();
  if (coloring.n() != view.n())
    throw std::invalid_argument("verify: coloring is over P_" + std::to_string(coloring.n()) +
                                " but the view is over P_" + std::to_string(view.n()));
  const std::uint64_t total = factorial(view.n());
  if (threads < 1) threads = 1;

  std::vector<WorkerReport> parts;
  if (threads == 1 || total < 1000) {
    parts.push_back(scan_range(view, coloring, 0, total));
  } else {
    const auto ranges = detail::rank_partitions(total, threads);
    parts.resize(ranges.size());
    std::vector<std::thread> pool;
    for (std::size_t w = 0; w < ranges.size(); ++w)
      pool.emplace_back([&, w] { parts[w] = scan_range(view, coloring, ranges[w].first, ranges[w].second); });
    for (auto& t : pool) t.join();
  }

  VerifyReport rep;
  rep.class_sizes.assign(coloring.k(), 0);
  for (const auto& part : parts) {
    rep.vertices += part.vertices;
    rep.edges += part.edges;
    rep.violations += part.violations;
    for (int c = 1; c <= coloring.k(); ++c) rep.class_sizes[c - 1] += part.class_sizes[c];
    for (const auto& w : part.witnesses) {
      if (rep.violation_witnesses.size() >= kWitnessCap) break;
      rep.violation_witnesses.push_back(w);
    }
  }
  rep.proper = (rep.violations == 0);
  // the balance flags are reported independently of properness
  const auto [mn, mx] = std::minmax_element(rep.class_sizes.begin(), rep.class_sizes.end());
  rep.equitable = (*mx - *mn <= 1);
  rep.strongly_equitable = (*mx == *mn);
  return rep;
}

}  // namespace

VerifyReport verify_proper(const PancakeView& view, const Coloring& coloring, int threads) {
  return verify_with_classes(view, coloring, threads);
}

VerifyReport verify_equitable(const PancakeView& view, const Coloring& coloring, int threads) {
  return verify_with_classes(view, coloring, threads);
}

VerifyReport verify_perfect(const PancakeView& view, const Coloring& coloring) {
  VerifyReport rep = verify_with_classes(view, coloring, 1);
  rep.perfect_checked = true;

  const int k = coloring.k();
  std::vector<std::vector<int>> reference(k + 1);
  std::vector<bool> have_reference(k + 1, false);
  std::vector<Permutation> reference_vertex;
  reference_vertex.reserve(k + 1);
  for (int c = 0; c <= k; ++c) reference_vertex.push_back(Permutation::identity(view.n()));

  bool perfect = true;
  std::vector<int> multiset;
  view.for_each_vertex([&](const Permutation& p) {
    if (!perfect) return;
    const int cu = coloring.color_of(p);
    multiset.clear();
    view.for_each_neighbor(p, [&](const Permutation& nbr, int) {
      multiset.push_back(coloring.color_of(nbr));
    });
    std::sort(multiset.begin(), multiset.end());
    if (!have_reference[cu]) {
      reference[cu] = multiset;
      reference_vertex[cu] = p;
      have_reference[cu] = true;
    } else if (reference[cu] != multiset) {
      perfect = false;
      rep.perfect_witnesses.push_back(reference_vertex[cu]);
      rep.perfect_witnesses.push_back(p);
    }
  });
  rep.perfect = perfect;
  return rep;
}

void write_coloring(std::ostream& os, const Coloring& coloring) {
  const int n = coloring.n();
  os << "pancake-coloring n=" << n << " k=" << coloring.k() << '\n';
  if (coloring.kind() == ColoringKind::tabular) {
    const auto& table = coloring.table();
    for (std::size_t r = 0; r < table.size(); ++r)
      os << r << ' ' << int(table[r]) << '\n';
    return;
  }
  Permutation p = Permutation::identity(n);
  const std::uint64_t total = factorial(n);
  for (std::uint64_t r = 0; r < total; ++r) {
    os << r << ' ' << coloring.color_of(p) << '\n';
    auto entries = p.entries();
    if (!std::next_permutation(entries.begin(), entries.end())) break;
    p = Permutation(std::move(entries));
  }
}

Coloring read_coloring(std::istream& is, const std::string& name) {
  std::string header;
  if (!std::getline(is, header))
    throw std::runtime_error("coloring file: missing header");
  int n = 0, k = 0;
  if (std::sscanf(header.c_str(), "pancake-coloring n=%d k=%d", &n, &k) != 2)
    throw std::runtime_error("coloring file: bad header '" + header + "'");
  check_dimensions(n, k);
  const std::uint64_t total = factorial(n);
  std::vector<std::uint8_t> table(total, 0);
  std::string line;
  std::uint64_t expected = 0;
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    std::istringstream ls(line);
    std::uint64_t rank;
    int color;
    if (!(ls >> rank >> color))
      throw std::runtime_error("coloring file: bad line '" + line + "'");
    if (rank != expected)
      throw std::runtime_error("coloring file: expected rank " + std::to_string(expected) +
                               ", got " + std::to_string(rank));
    if (color < 1 || color > k)
      throw std::runtime_error("coloring file: color " + std::to_string(color) + " out of [1, k]");
    table[rank] = static_cast<std::uint8_t>(color);
    ++expected;
  }
  if (expected != total)
    throw std::runtime_error("coloring file: " + std::to_string(expected) + " entries, expected " +
                             std::to_string(total));
  return Coloring::tabular(n, k, std::move(table), name);
}

}  // namespace pancake
