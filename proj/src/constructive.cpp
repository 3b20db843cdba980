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

#include "pancake/constructive.hpp"

#include <algorithm>
#include <memory>
#include <numeric>
#include <stdexcept>
#include <string>

#include "pancake/errors.hpp"
#include "pancake/pancake_graph.hpp"

namespace pancake {

namespace {

// Optimal 3-coloring of P_4 by lexicographic rank, produced once by the
// deterministic exact solver and frozen here; a test regenerates it and
// compares for equality.
constexpr std::uint8_t kP4Table[24] = {1, 1, 2, 2, 2, 1, 2, 3, 1, 3, 3, 1,
                                       1, 1, 2, 1, 2, 3, 1, 2, 2, 3, 1, 2};

}  // namespace

std::vector<Permutation> cycle_vertices(const Permutation& p) {
  if (p.size() < 5) {
    throw std::invalid_argument("cycle_vertices: the r_4/r_5 cycle structure needs n >= 5, got n = " +
                                std::to_string(p.size()));
  }
  std::vector<Permutation> cycle;
  cycle.reserve(10);
  Permutation q = p;
  for (int step = 0; step < 10; ++step) {
    cycle.push_back(q);
    q.reverse_prefix(step % 2 == 0 ? 5 : 4);
  }
  return cycle;
}

CyclePosition cycle_position(const Permutation& p) {
  const std::vector<Permutation> anchored = cycle_vertices(p);
  const Permutation& rep = *std::min_element(anchored.begin(), anchored.end());
  // Re-walk from the representative so the reported distance always refers
  // to the canonical traversal (r_5 applied first from the representative).
  const std::vector<Permutation> canonical = cycle_vertices(rep);
  const auto it = std::find(canonical.begin(), canonical.end(), p);
  return CyclePosition{rep, static_cast<int>(it - canonical.begin())};
}

int parity4_color(const Permutation& p) {
  const int n = p.size();
  if (n < 5 || n > 7) {
    throw std::invalid_argument(
        "parity4_color: the parity argument works only for n in {5, 6, 7} (r_8 and r_9 are even "
        "reversals), got n = " +
        std::to_string(n));
  }
  const CyclePosition pos = cycle_position(p);
  const int base = parity(p) == Parity::even ? 1 : 3;
  return base + pos.distance % 2;
}

Coloring parity4_coloring(int n) {
  if (n < 5 || n > 7) {
    throw std::invalid_argument("parity4_coloring: n must be in {5, 6, 7}, got " +
                                std::to_string(n));
  }
  return Coloring(n, 4, [](const Permutation& p) { return parity4_color(p); }, "parity4");
}

int BlockScheme::n() const { return std::accumulate(sizes.begin(), sizes.end(), 0); }

Coloring base_coloring(int size, const BaseRegistry* extra) {
  if (extra) {
    const auto it = extra->find(size);
    if (it != extra->end()) {
      if (it->second.n() != size) {
        throw std::invalid_argument("base_coloring: registered coloring for size " +
                                    std::to_string(size) + " is on P_" +
                                    std::to_string(it->second.n()));
      }
      return it->second;
    }
  }
  switch (size) {
    case 1:
      return Coloring(1, 1, [](const Permutation&) { return 1; }, "constant");
    case 2:
    case 3:
      // r_2 and r_3 are both odd reversals, so permutation parity is a
      // proper bipartition of P_2 and P_3.
      return Coloring(
          size, 2, [](const Permutation& p) { return parity(p) == Parity::even ? 1 : 2; },
          "parity2");
    case 4:
      return Coloring::tabular(4, 3, std::vector<std::uint8_t>(std::begin(kP4Table), std::end(kP4Table)),
                               "table-p4");
    case 5:
    case 6:
    case 7:
      return parity4_coloring(size);
    default:
      throw std::invalid_argument("base_coloring: no base registered for block size " +
                                  std::to_string(size) +
                                  " (built-ins cover 1-7; supply larger tables via the registry)");
  }
}

Coloring compose(const BlockScheme& scheme, const BaseRegistry* extra) {
  if (scheme.sizes.empty()) {
    throw std::invalid_argument("compose: the block scheme is empty");
  }
  for (int s : scheme.sizes) {
    if (s < 1) throw std::invalid_argument("compose: block sizes must be positive");
  }
  const int n = scheme.n();
  if (n > kMaxEnumN) {
    throw capacity_error("compose: total size " + std::to_string(n) + " exceeds the enumeration cap " +
                         std::to_string(kMaxEnumN));
  }

  struct Block {
    std::vector<int> symbols;
    Coloring base;
    int offset;
  };
  auto blocks = std::make_shared<std::vector<Block>>();
  auto block_of_symbol = std::make_shared<std::vector<int>>(static_cast<std::size_t>(n) + 1, -1);
  int next_symbol = 1;
  int offset = 0;
  std::string name = "compose";
  for (int s : scheme.sizes) {
    Block b{{}, base_coloring(s, extra), offset};
    b.symbols.reserve(static_cast<std::size_t>(s));
    for (int v = 0; v < s; ++v) {
      (*block_of_symbol)[static_cast<std::size_t>(next_symbol)] =
          static_cast<int>(blocks->size());
      b.symbols.push_back(next_symbol++);
    }
    offset += b.base.k();
    name += (blocks->empty() ? "-" : "+") + std::to_string(s);
    blocks->push_back(std::move(b));
  }

  return Coloring(
      n, offset,
      [blocks, block_of_symbol](const Permutation& p) {
        const Block& b = (*blocks)[static_cast<std::size_t>(
            (*block_of_symbol)[static_cast<std::size_t>(p.first())])];
        return b.offset + b.base.color_of(project(p, b.symbols));
      },
      std::move(name));
}

}  // namespace pancake
