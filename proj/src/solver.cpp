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

#include "pancake/solver.hpp"

#include <algorithm>
#include <bit>
#include <chrono>
#include <cstdlib>
#include <cstring>
#include <random>
#include <stdexcept>
#include <thread>
#include <unordered_map>

#include "pancake/errors.hpp"

namespace pancake {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

void validate_budget(const SearchBudget& budget) {
  if (budget.max_seconds <= 0.0) {
    throw std::invalid_argument("search budget needs a positive time limit");
  }
}

void validate_k(int k, int order) {
  if (k < 1 || k > 255) {
    throw std::invalid_argument("color count must be between 1 and 255");
  }
  (void)order;
}

}  // namespace

SolverGraph SolverGraph::from_edges(int order, const std::vector<std::pair<int, int>>& edges) {
  if (order < 0) {
    throw std::invalid_argument("graph order cannot be negative");
  }
  std::vector<std::int32_t> degree(static_cast<std::size_t>(order), 0);
  for (const auto& [u, v] : edges) {
    if (u < 0 || v < 0 || u >= order || v >= order) {
      throw std::invalid_argument("edge endpoint out of range");
    }
    if (u == v) {
      throw std::invalid_argument("self-loops are not allowed");
    }
    ++degree[static_cast<std::size_t>(u)];
    ++degree[static_cast<std::size_t>(v)];
  }
  SolverGraph g;
  g.offsets.assign(static_cast<std::size_t>(order) + 1, 0);
  for (int v = 0; v < order; ++v) {
    g.offsets[static_cast<std::size_t>(v) + 1] =
        g.offsets[static_cast<std::size_t>(v)] + degree[static_cast<std::size_t>(v)];
  }
  g.neighbors.resize(static_cast<std::size_t>(g.offsets.back()));
  std::vector<std::int32_t> cursor(g.offsets.begin(), g.offsets.end() - 1);
  for (const auto& [u, v] : edges) {
    g.neighbors[static_cast<std::size_t>(cursor[static_cast<std::size_t>(u)]++)] = v;
    g.neighbors[static_cast<std::size_t>(cursor[static_cast<std::size_t>(v)]++)] = u;
  }
  for (int v = 0; v < order; ++v) {
    std::sort(g.neighbors.begin() + g.offsets[static_cast<std::size_t>(v)],
              g.neighbors.begin() + g.offsets[static_cast<std::size_t>(v) + 1]);
    auto first = g.neighbors.begin() + g.offsets[static_cast<std::size_t>(v)];
    auto last = g.neighbors.begin() + g.offsets[static_cast<std::size_t>(v) + 1];
    if (std::adjacent_find(first, last) != last) {
      throw std::invalid_argument("duplicate edge in edge list");
    }
  }
  return g;
}

SolverGraph SolverGraph::from_view(const PancakeView& view) {
  view.require_enumerable();
  const std::uint64_t count = view.vertex_count();
  if (count > static_cast<std::uint64_t>(INT32_MAX)) {
    throw capacity_error("view is too large to materialize");
  }
  const int order = static_cast<int>(count);
  const int n = view.n();

  // Enumeration position of every member, addressed by lexicographic rank.
  const bool unrestricted = count == factorial(n);
  std::vector<std::int32_t> position;
  std::vector<Permutation> members;
  if (!unrestricted) {
    position.assign(static_cast<std::size_t>(factorial(n)), -1);
    std::int32_t next = 0;
    members.reserve(static_cast<std::size_t>(order));
    view.for_each_vertex([&](const Permutation& p) {
      position[static_cast<std::size_t>(lex_rank(p))] = next++;
      members.push_back(p);
    });
  }

  SolverGraph g;
  g.offsets.assign(static_cast<std::size_t>(order) + 1, 0);
  std::vector<std::int32_t> degs(static_cast<std::size_t>(order), 0);
  auto for_each_member = [&](auto&& fn) {
    if (unrestricted) {
      view.for_each_vertex(fn);
    } else {
      for (const Permutation& p : members) fn(p);
    }
  };
  std::int32_t id = 0;
  for_each_member([&](const Permutation& p) {
    int deg = 0;
    view.for_each_neighbor(p, [&](const Permutation&, int) { ++deg; });
    degs[static_cast<std::size_t>(id++)] = deg;
  });
  for (int v = 0; v < order; ++v) {
    g.offsets[static_cast<std::size_t>(v) + 1] =
        g.offsets[static_cast<std::size_t>(v)] + degs[static_cast<std::size_t>(v)];
  }
  g.neighbors.resize(static_cast<std::size_t>(g.offsets.back()));
  id = 0;
  std::vector<std::int32_t> cursor(g.offsets.begin(), g.offsets.end() - 1);
  for_each_member([&](const Permutation& p) {
    const std::int32_t source = id++;
    view.for_each_neighbor(p, [&](const Permutation& q, int) {
      const Rank r = lex_rank(q);
      const std::int32_t target =
          unrestricted ? static_cast<std::int32_t>(r) : position[static_cast<std::size_t>(r)];
      g.neighbors[static_cast<std::size_t>(cursor[static_cast<std::size_t>(source)]++)] = target;
    });
  });
  return g;
}

namespace {

// ---------------------------------------------------------------------------
// Complete search
// ---------------------------------------------------------------------------

class CompleteSearch {
 public:
  CompleteSearch(const SolverGraph& g, int k, const SearchBudget& budget)
      : g_(g),
        k_(k),
        order_(g.order()),
        full_mask_((k >= 32) ? ~0u : ((1u << k) - 1u)),
        color_(static_cast<std::size_t>(order_), 0),
        state_(static_cast<std::size_t>(order_), kActive),
        active_deg_(static_cast<std::size_t>(order_), 0),
        forbid_mask_(static_cast<std::size_t>(order_), 0),
        forbid_count_(static_cast<std::size_t>(order_) * static_cast<std::size_t>(k), 0),
        active_pos_(static_cast<std::size_t>(order_), 0),
        touched_pool_(static_cast<std::size_t>(order_) + 2),
        budget_(budget) {
    active_list_.reserve(static_cast<std::size_t>(order_));
    for (int v = 0; v < order_; ++v) {
      active_deg_[static_cast<std::size_t>(v)] =
          static_cast<std::int32_t>(g_.adj(v).size());
      active_pos_[static_cast<std::size_t>(v)] = v;
      active_list_.push_back(v);
    }
    trail_.reserve(static_cast<std::size_t>(order_) * 2);
  }

  SolveOutcome run() {
    const auto start = Clock::now();
    deadline_ = start + std::chrono::duration_cast<Clock::duration>(
                            std::chrono::duration<double>(budget_.max_seconds));
    SolveOutcome out;
    bool satisfiable = false;
    if (order_ == 0) {
      satisfiable = true;
    } else if (preassign()) {
      satisfiable = dfs();
    }
    out.nodes = nodes_;
    out.elapsed_seconds = seconds_since(start);
    if (satisfiable) {
      finish_postponed();
      out.status = SolveStatus::colored;
      out.assignment = color_;
    } else {
      out.status = timed_out_ ? SolveStatus::timeout : SolveStatus::unsat;
    }
    return out;
  }

 private:
  static constexpr std::uint8_t kActive = 0;
  static constexpr std::uint8_t kPostponed = 1;
  static constexpr std::uint8_t kColored = 2;

  int avail(int v) const {
    return k_ - std::popcount(forbid_mask_[static_cast<std::size_t>(v)]);
  }

  void active_remove(int v) {
    const std::int32_t pos = active_pos_[static_cast<std::size_t>(v)];
    const int moved = active_list_.back();
    active_list_[static_cast<std::size_t>(pos)] = moved;
    active_pos_[static_cast<std::size_t>(moved)] = pos;
    active_list_.pop_back();
  }

  void active_add(int v) {
    active_pos_[static_cast<std::size_t>(v)] = static_cast<std::int32_t>(active_list_.size());
    active_list_.push_back(v);
  }

  // Every coloring can be relabeled so that vertex 0 has color 1 and its
  // first neighbor color 2, so fixing both preserves satisfiability.
  bool preassign() {
    std::vector<int>& touched = touched_pool_.back();
    touched.clear();
    if (!assign(0, 1, touched) || !settle(touched)) return false;
    const auto adj0 = g_.adj(0);
    if (!adj0.empty() && k_ >= 2) {
      const int v1 = adj0[0];
      if (state_[static_cast<std::size_t>(v1)] == kActive) {
        touched.clear();
        if (!assign(v1, 2, touched) || !settle(touched)) return false;
      }
    }
    return true;
  }

  // Applies the assignment and records trail events; collects neighbors whose
  // domains changed.  Returns false when a neighbor runs out of colors.
  bool assign(int v, int c, std::vector<int>& touched) {
    color_[static_cast<std::size_t>(v)] = static_cast<std::uint8_t>(c);
    state_[static_cast<std::size_t>(v)] = kColored;
    active_remove(v);
    trail_.push_back(v * 2);
    const std::uint32_t bit = 1u << (c - 1);
    bool ok = true;
    for (std::int32_t u : g_.adj(v)) {
      const auto su = static_cast<std::size_t>(u);
      if (state_[su] == kColored) continue;
      --active_deg_[su];
      std::uint8_t& cnt = forbid_count_[su * static_cast<std::size_t>(k_) +
                                        static_cast<std::size_t>(c - 1)];
      if (cnt++ == 0) {
        forbid_mask_[su] |= bit;
        if (state_[su] == kActive && avail(u) == 0) ok = false;
      }
      touched.push_back(u);
    }
    return ok;
  }

  void postpone(int v, std::vector<int>& touched) {
    state_[static_cast<std::size_t>(v)] = kPostponed;
    active_remove(v);
    trail_.push_back(v * 2 + 1);
    postponed_.push_back(v);
    for (std::int32_t u : g_.adj(v)) {
      const auto su = static_cast<std::size_t>(u);
      if (state_[su] == kColored) continue;
      --active_deg_[su];
      touched.push_back(u);
    }
  }

  // Processes domain updates to a fixpoint: postpones vertices that keep a
  // spare color for every remaining constraint and assigns forced vertices.
  bool settle(std::vector<int>& queue) {
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const int v = queue[head];
      const auto sv = static_cast<std::size_t>(v);
      if (state_[sv] != kActive) continue;
      const int options = avail(v);
      if (options == 0) return false;
      if (options > active_deg_[sv]) {
        postpone(v, queue);
      } else if (options == 1) {
        const std::uint32_t open = ~forbid_mask_[sv] & full_mask_;
        const int c = std::countr_zero(open) + 1;
        if (!assign(v, c, queue)) return false;
      }
    }
    return true;
  }

  void undo_to(std::size_t mark) {
    while (trail_.size() > mark) {
      const int event = trail_.back();
      trail_.pop_back();
      const int v = event / 2;
      const auto sv = static_cast<std::size_t>(v);
      if (event & 1) {  // postponement
        postponed_.pop_back();
        state_[sv] = kActive;
        active_add(v);
        for (std::int32_t u : g_.adj(v)) {
          const auto su = static_cast<std::size_t>(u);
          if (state_[su] != kColored) ++active_deg_[su];
        }
      } else {  // assignment
        const int c = color_[sv];
        const std::uint32_t bit = 1u << (c - 1);
        color_[sv] = 0;
        state_[sv] = kActive;
        active_add(v);
        for (std::int32_t u : g_.adj(v)) {
          const auto su = static_cast<std::size_t>(u);
          if (state_[su] == kColored) continue;
          ++active_deg_[su];
          std::uint8_t& cnt = forbid_count_[su * static_cast<std::size_t>(k_) +
                                            static_cast<std::size_t>(c - 1)];
          if (--cnt == 0) forbid_mask_[su] &= ~bit;
        }
      }
    }
  }

  // Saturation-first branching: most forbidden colors, then most active
  // neighbors, then lowest id.  The explicit id tie-break keeps the choice
  // independent of the active list's internal order.
  int select() const {
    int best = -1;
    int best_sat = -1;
    std::int32_t best_deg = -1;
    for (int v : active_list_) {
      const auto sv = static_cast<std::size_t>(v);
      const int sat = std::popcount(forbid_mask_[sv]);
      if (sat < best_sat) continue;
      if (sat > best_sat || active_deg_[sv] > best_deg ||
          (active_deg_[sv] == best_deg && v < best)) {
        best = v;
        best_sat = sat;
        best_deg = active_deg_[sv];
      }
    }
    return best;
  }

  bool out_of_budget() {
    if (nodes_ >= budget_.max_nodes) {
      timed_out_ = true;
    } else if ((nodes_ & 1023u) == 0 && Clock::now() >= deadline_) {
      timed_out_ = true;
    }
    return timed_out_;
  }

  // Failed-color probing on binary domains: trial-assign each of the two
  // open colors; a failed trial forces the other color, two failed trials
  // refute the node.  Runs to a fixpoint.  Only applied near the root where
  // the payoff outweighs the per-node cost.
  bool probe(int depth) {
    if (depth > probe_depth_) return true;
    std::vector<int>& touched = touched_pool_[static_cast<std::size_t>(depth)];
    bool changed = true;
    while (changed) {
      changed = false;
      probe_snapshot_.assign(active_list_.begin(), active_list_.end());
      for (int v : probe_snapshot_) {
        const auto sv = static_cast<std::size_t>(v);
        if (state_[sv] != kActive) continue;
        if (avail(v) != 2) continue;
        const std::uint32_t open = ~forbid_mask_[sv] & full_mask_;
        const int c1 = std::countr_zero(open) + 1;
        const int c2 = std::countr_zero(open & (open - 1)) + 1;
        ++nodes_;
        if (out_of_budget()) return false;
        const std::size_t mark = trail_.size();
        touched.clear();
        const bool ok1 = assign(v, c1, touched) && settle(touched);
        undo_to(mark);
        if (ok1) continue;
        touched.clear();
        if (!(assign(v, c2, touched) && settle(touched))) return false;
        changed = true;
      }
    }
    return true;
  }

  bool dfs(int depth = 0) {
    if (!probe(depth)) return false;
    const int v = select();
    if (v < 0) return true;
    std::uint32_t open = ~forbid_mask_[static_cast<std::size_t>(v)] & full_mask_;
    std::vector<int>& touched = touched_pool_[static_cast<std::size_t>(depth)];
    while (open != 0) {
      const int c = std::countr_zero(open) + 1;
      open &= open - 1;
      ++nodes_;
      if (out_of_budget()) return false;
      const std::size_t mark = trail_.size();
      touched.clear();
      if (assign(v, c, touched) && settle(touched) && dfs(depth + 1)) return true;
      undo_to(mark);
      if (timed_out_) return false;
    }
    return false;
  }

  // Postponed vertices are colored in reverse order; the postponement
  // condition guarantees a spare color at that point.
  void finish_postponed() {
    for (auto it = postponed_.rbegin(); it != postponed_.rend(); ++it) {
      const int v = *it;
      std::uint32_t used = 0;
      for (std::int32_t u : g_.adj(v)) {
        const std::uint8_t c = color_[static_cast<std::size_t>(u)];
        if (c != 0) used |= 1u << (c - 1);
      }
      const std::uint32_t open = ~used & full_mask_;
      if (open == 0) {
        throw std::logic_error("postponed vertex has no spare color");
      }
      color_[static_cast<std::size_t>(v)] =
          static_cast<std::uint8_t>(std::countr_zero(open) + 1);
    }
    postponed_.clear();
  }

  const SolverGraph& g_;
  const int k_;
  const int order_;
  const std::uint32_t full_mask_;
  std::vector<std::uint8_t> color_;
  std::vector<std::uint8_t> state_;
  std::vector<std::int32_t> active_deg_;
  std::vector<std::uint32_t> forbid_mask_;
  std::vector<std::uint8_t> forbid_count_;
  std::vector<int> active_list_;           // vertices currently active
  std::vector<std::int32_t> active_pos_;   // position in active_list_
  std::vector<std::vector<int>> touched_pool_;  // per-depth settle queues
  std::vector<int> trail_;      // v*2 = assignment, v*2+1 = postponement
  std::vector<int> postponed_;  // chronological postponement order
  std::vector<int> probe_snapshot_;
  // Probing pays for itself only on the first few levels, where one refuted
  // trial removes a large subtree.
  int probe_depth_ = 3;
  SearchBudget budget_;
  Clock::time_point deadline_;
  std::uint64_t nodes_ = 0;
  bool timed_out_ = false;
};

// ---------------------------------------------------------------------------
// Tabu search
// ---------------------------------------------------------------------------

class TabuSearch {
 public:
  TabuSearch(const SolverGraph& g, int k, const SearchBudget& budget,
             const std::vector<std::uint8_t>* initial)
      : g_(g),
        k_(k),
        order_(g.order()),
        budget_(budget),
        rng_(budget.seed),
        color_(static_cast<std::size_t>(order_), 1),
        gamma_(static_cast<std::size_t>(order_) * static_cast<std::size_t>(k), 0),
        tabu_until_(static_cast<std::size_t>(order_) * static_cast<std::size_t>(k), 0),
        in_conflict_(static_cast<std::size_t>(order_), -1) {
    if (initial != nullptr) {
      if (initial->size() != static_cast<std::size_t>(order_)) {
        throw std::invalid_argument("initial assignment has the wrong size");
      }
      color_ = *initial;
      for (std::uint8_t c : color_) {
        if (c < 1 || c > k_) {
          throw std::invalid_argument("initial assignment uses an out-of-range color");
        }
      }
    } else {
      for (auto& c : color_) {
        c = static_cast<std::uint8_t>(1 + rng_() % static_cast<std::uint32_t>(k_));
      }
    }
  }

  SolveOutcome run() {
    const auto start = Clock::now();
    const auto deadline = start + std::chrono::duration_cast<Clock::duration>(
                                      std::chrono::duration<double>(budget_.max_seconds));
    rebuild();
    SolveOutcome out;
    std::uint64_t iter = 0;
    std::uint64_t best_f = conflicts_;
    std::uint64_t last_improvement = 0;
    while (conflicts_ != 0) {
      if (iter >= budget_.max_nodes) break;
      if ((iter & 4095u) == 0 && Clock::now() >= deadline) break;
      ++iter;
      step(iter, best_f);
      if (conflicts_ < best_f) {
        best_f = conflicts_;
        last_improvement = iter;
      } else if (iter - last_improvement > kRestartGap) {
        perturb();
        best_f = std::min(best_f, conflicts_);
        last_improvement = iter;
      }
    }
    out.nodes = iter;
    out.elapsed_seconds = seconds_since(start);
    if (conflicts_ == 0) {
      out.status = SolveStatus::colored;
      out.assignment = color_;
    } else {
      out.status = SolveStatus::timeout;
    }
    return out;
  }

 private:
  static constexpr std::uint64_t kRestartGap = 400000;

  std::int32_t& gamma(int v, int c) {
    return gamma_[static_cast<std::size_t>(v) * static_cast<std::size_t>(k_) +
                  static_cast<std::size_t>(c - 1)];
  }
  std::uint64_t& tabu(int v, int c) {
    return tabu_until_[static_cast<std::size_t>(v) * static_cast<std::size_t>(k_) +
                       static_cast<std::size_t>(c - 1)];
  }

  void set_conflicted(int v, bool value) {
    auto& slot = in_conflict_[static_cast<std::size_t>(v)];
    if (value && slot < 0) {
      slot = static_cast<std::int32_t>(conflicted_.size());
      conflicted_.push_back(v);
    } else if (!value && slot >= 0) {
      const int moved = conflicted_.back();
      conflicted_[static_cast<std::size_t>(slot)] = moved;
      in_conflict_[static_cast<std::size_t>(moved)] = slot;
      conflicted_.pop_back();
      slot = -1;
    }
  }

  void rebuild() {
    std::fill(gamma_.begin(), gamma_.end(), 0);
    conflicted_.clear();
    std::fill(in_conflict_.begin(), in_conflict_.end(), -1);
    conflicts_ = 0;
    for (int v = 0; v < order_; ++v) {
      for (std::int32_t u : g_.adj(v)) {
        ++gamma(v, color_[static_cast<std::size_t>(u)]);
      }
    }
    for (int v = 0; v < order_; ++v) {
      const std::int32_t hits = gamma(v, color_[static_cast<std::size_t>(v)]);
      if (hits > 0) {
        set_conflicted(v, true);
        conflicts_ += static_cast<std::uint64_t>(hits);
      }
    }
    conflicts_ /= 2;
  }

  void recolor(int v, int to) {
    const int from = color_[static_cast<std::size_t>(v)];
    color_[static_cast<std::size_t>(v)] = static_cast<std::uint8_t>(to);
    conflicts_ += static_cast<std::uint64_t>(gamma(v, to)) -
                  static_cast<std::uint64_t>(gamma(v, from));
    for (std::int32_t u : g_.adj(v)) {
      --gamma(u, from);
      ++gamma(u, to);
      set_conflicted(u, gamma(u, color_[static_cast<std::size_t>(u)]) > 0);
    }
    set_conflicted(v, gamma(v, to) > 0);
  }

  void step(std::uint64_t iter, std::uint64_t best_f) {
    const int v = conflicted_[rng_() % static_cast<std::uint32_t>(conflicted_.size())];
    const int cur = color_[static_cast<std::size_t>(v)];
    const std::int32_t base = gamma(v, cur);
    int best_color = 0;
    std::int32_t best_delta = INT32_MAX;
    for (int c = 1; c <= k_; ++c) {
      if (c == cur) continue;
      const std::int32_t delta = gamma(v, c) - base;
      const bool is_tabu = tabu(v, c) > iter;
      const bool aspires = conflicts_ + static_cast<std::uint64_t>(delta) <
                           best_f;  // delta may be negative; wraparound is fine
      if (is_tabu && !aspires) continue;
      if (delta < best_delta) {
        best_delta = delta;
        best_color = c;
      }
    }
    if (best_color == 0) {  // all moves tabu: diversify
      best_color = 1 + static_cast<int>(rng_() % static_cast<std::uint32_t>(k_));
      if (best_color == cur) best_color = 1 + best_color % k_;
    }
    // Short constant tenure.  Conflict-proportional tenures (the classic
    // 0.6·|conflicted| rule) over-ban moves on large sparse instances here:
    // with thousands of conflicted vertices mid-search they freeze the
    // trajectory far from a solution, while a jittered constant descends
    // orders of magnitude faster on P_8 and P_9 at k = 4.
    tabu(v, cur) = iter + 2 + rng_() % 10;
    recolor(v, best_color);
  }

  // Shake the current assignment when progress stalls.
  void perturb() {
    const std::size_t shake = conflicted_.size();
    for (std::size_t i = 0; i < shake; ++i) {
      const int v = conflicted_[rng_() % static_cast<std::uint32_t>(conflicted_.size())];
      const int c = 1 + static_cast<int>(rng_() % static_cast<std::uint32_t>(k_));
      recolor(v, c);
      if (conflicted_.empty()) break;
    }
    std::fill(tabu_until_.begin(), tabu_until_.end(), 0);
  }

  const SolverGraph& g_;
  const int k_;
  const int order_;
  SearchBudget budget_;
  std::mt19937 rng_;
  std::vector<std::uint8_t> color_;
  std::vector<std::int32_t> gamma_;
  std::vector<std::uint64_t> tabu_until_;
  std::vector<std::int32_t> in_conflict_;  // position in conflicted_, -1 if absent
  std::vector<int> conflicted_;
  std::uint64_t conflicts_ = 0;
};

std::vector<std::uint8_t> greedy_assignment(const SolverGraph& g, int& colors_used) {
  const int order = g.order();
  std::vector<std::uint8_t> color(static_cast<std::size_t>(order), 0);
  std::vector<std::uint32_t> forbid(static_cast<std::size_t>(order), 0);
  std::vector<std::int32_t> sat(static_cast<std::size_t>(order), 0);
  colors_used = 0;
  for (int step = 0; step < order; ++step) {
    int v = -1;
    std::int32_t best_sat = -1;
    std::size_t best_deg = 0;
    for (int u = 0; u < order; ++u) {
      const auto su = static_cast<std::size_t>(u);
      if (color[su] != 0) continue;
      const std::size_t deg = g.adj(u).size();
      if (sat[su] > best_sat || (sat[su] == best_sat && deg > best_deg)) {
        v = u;
        best_sat = sat[su];
        best_deg = deg;
      }
    }
    const auto sv = static_cast<std::size_t>(v);
    const int c = std::countr_zero(~forbid[sv]) + 1;
    color[sv] = static_cast<std::uint8_t>(c);
    colors_used = std::max(colors_used, c);
    const std::uint32_t bit = 1u << (c - 1);
    for (std::int32_t u : g.adj(v)) {
      const auto su = static_cast<std::size_t>(u);
      if (color[su] == 0 && (forbid[su] & bit) == 0) {
        forbid[su] |= bit;
        ++sat[su];
      }
    }
  }
  return color;
}

}  // namespace

SolveOutcome find_k_coloring_complete(const SolverGraph& g, int k, const SearchBudget& budget) {
  validate_budget(budget);
  validate_k(k, g.order());
  if (k > 31) {
    throw std::invalid_argument("complete search supports at most 31 colors");
  }
  CompleteSearch search(g, k, budget);
  return search.run();
}

SolveOutcome find_k_coloring_tabu(const SolverGraph& g, int k, const SearchBudget& budget,
                                  const std::vector<std::uint8_t>* initial, int workers) {
  validate_budget(budget);
  validate_k(k, g.order());
  if (workers < 1) {
    throw std::invalid_argument("worker count must be positive");
  }
  if (g.order() == 0) {
    return {SolveStatus::colored, std::vector<std::uint8_t>{}, 0, 0.0};
  }
  if (workers == 1) {
    TabuSearch search(g, k, budget, initial);
    return search.run();
  }
  std::vector<SolveOutcome> outcomes(static_cast<std::size_t>(workers));
  std::vector<std::thread> pool;
  pool.reserve(static_cast<std::size_t>(workers));
  for (int w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      SearchBudget local = budget;
      local.seed = budget.seed + static_cast<std::uint32_t>(w);
      TabuSearch search(g, k, local, initial);
      outcomes[static_cast<std::size_t>(w)] = search.run();
    });
  }
  for (auto& t : pool) t.join();
  // Winner: the successful worker with the lowest seed.
  for (auto& out : outcomes) {
    if (out.status == SolveStatus::colored) return std::move(out);
  }
  return std::move(outcomes.front());
}

namespace {

constexpr std::uint64_t kCompleteVertexCap = 5040;

Coloring coloring_from_assignment(const PancakeView& view, int k,
                                  const std::vector<std::uint8_t>& assignment) {
  const int n = view.n();
  std::vector<std::uint8_t> table(static_cast<std::size_t>(factorial(n)), 1);
  std::size_t id = 0;
  view.for_each_vertex([&](const Permutation& p) {
    table[static_cast<std::size_t>(lex_rank(p))] = assignment[id++];
  });
  return Coloring::tabular(n, k, std::move(table), "solver-witness");
}

}  // namespace

ViewSolveOutcome find_k_coloring(const PancakeView& view, int k, const SearchBudget& budget,
                                 SolveMode mode, int workers, const Coloring* initial) {
  validate_budget(budget);
  validate_k(k, 0);
  if (mode == SolveMode::automatic) {
    mode = view.vertex_count() <= kCompleteVertexCap ? SolveMode::complete : SolveMode::heuristic;
  }
  if (mode == SolveMode::complete && view.vertex_count() > kCompleteVertexCap) {
    throw capacity_error("complete search is limited to 5040 vertices");
  }
  view.require_enumerable();
  const SolverGraph g = SolverGraph::from_view(view);
  std::optional<std::vector<std::uint8_t>> seed;
  if (initial != nullptr && mode == SolveMode::heuristic) {
    if (initial->n() != view.n()) {
      throw std::invalid_argument("initial coloring is for a different n");
    }
    seed.emplace();
    seed->reserve(view.vertex_count());
    view.for_each_vertex([&](const Permutation& p) {
      const int c = initial->color_of(p);
      // Colors beyond the target palette start in conflict-free slot 1; the
      // search repairs them like any other conflict.
      seed->push_back(static_cast<std::uint8_t>(c <= k ? c : 1));
    });
  }
  SolveOutcome raw = mode == SolveMode::complete
                         ? find_k_coloring_complete(g, k, budget)
                         : find_k_coloring_tabu(g, k, budget, seed ? &*seed : nullptr, workers);
  ViewSolveOutcome out;
  out.status = raw.status;
  out.nodes = raw.nodes;
  out.elapsed_seconds = raw.elapsed_seconds;
  if (raw.status == SolveStatus::colored) {
    Coloring witness = coloring_from_assignment(view, k, *raw.assignment);
    const VerifyReport check = verify_proper(view, witness);
    if (!check.proper) {
      throw std::logic_error("solver produced an improper coloring");
    }
    out.coloring = std::move(witness);
  }
  return out;
}

BipartiteResult is_bipartite(const SolverGraph& g) {
  const int order = g.order();
  std::vector<std::int8_t> side(static_cast<std::size_t>(order), -1);
  std::vector<std::int32_t> parent(static_cast<std::size_t>(order), -1);
  std::vector<std::int32_t> queue;
  queue.reserve(static_cast<std::size_t>(order));
  for (int root = 0; root < order; ++root) {
    if (side[static_cast<std::size_t>(root)] >= 0) continue;
    side[static_cast<std::size_t>(root)] = 0;
    queue.clear();
    queue.push_back(root);
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const int v = queue[head];
      for (std::int32_t u : g.adj(v)) {
        const auto su = static_cast<std::size_t>(u);
        if (side[su] < 0) {
          side[su] = static_cast<std::int8_t>(1 - side[static_cast<std::size_t>(v)]);
          parent[su] = v;
          queue.push_back(u);
        } else if (side[su] == side[static_cast<std::size_t>(v)]) {
          // Odd cycle: join the two tree paths at their first shared vertex.
          std::vector<std::int32_t> path_v{v};
          while (parent[static_cast<std::size_t>(path_v.back())] >= 0) {
            path_v.push_back(parent[static_cast<std::size_t>(path_v.back())]);
          }
          std::vector<std::int8_t> on_path(static_cast<std::size_t>(order), 0);
          for (std::int32_t x : path_v) on_path[static_cast<std::size_t>(x)] = 1;
          std::vector<std::int32_t> path_u{u};
          while (!on_path[static_cast<std::size_t>(path_u.back())]) {
            path_u.push_back(parent[static_cast<std::size_t>(path_u.back())]);
          }
          const std::int32_t meet = path_u.back();
          path_u.pop_back();
          BipartiteResult res;
          res.bipartite = false;
          res.odd_cycle.push_back(meet);
          const auto meet_at = std::find(path_v.begin(), path_v.end(), meet);
          for (auto it = meet_at; it != path_v.begin();) {
            --it;
            res.odd_cycle.push_back(*it);
          }
          for (std::int32_t x : path_u) res.odd_cycle.push_back(x);
          return res;
        }
      }
    }
  }
  return {true, {}};
}

ViewBipartiteResult is_bipartite(const PancakeView& view) {
  view.require_enumerable();
  const SolverGraph g = SolverGraph::from_view(view);
  const BipartiteResult raw = is_bipartite(g);
  ViewBipartiteResult out;
  out.bipartite = raw.bipartite;
  if (!raw.bipartite) {
    std::vector<Permutation> members;
    members.reserve(static_cast<std::size_t>(view.vertex_count()));
    view.for_each_vertex([&](const Permutation& p) { members.push_back(p); });
    for (int id : raw.odd_cycle) {
      out.odd_cycle.push_back(members[static_cast<std::size_t>(id)]);
    }
  }
  return out;
}

namespace {

bool brute_force_extend(const SolverGraph& g, int k, int v, std::vector<std::uint8_t>& color,
                        int used) {
  if (v == g.order()) return true;
  // Canonical cap: the next fresh color is always at most used + 1.
  const int limit = std::min(k, used + 1);
  for (int c = 1; c <= limit; ++c) {
    bool ok = true;
    for (std::int32_t u : g.adj(v)) {
      if (color[static_cast<std::size_t>(u)] == c) {
        ok = false;
        break;
      }
    }
    if (!ok) continue;
    color[static_cast<std::size_t>(v)] = static_cast<std::uint8_t>(c);
    if (brute_force_extend(g, k, v + 1, color, std::max(used, c))) return true;
    color[static_cast<std::size_t>(v)] = 0;
  }
  return false;
}

}  // namespace

int brute_force_chi(const SolverGraph& g) {
  if (g.order() > 10) {
    throw std::invalid_argument("brute-force oracle is limited to 10 vertices");
  }
  if (g.order() == 0) return 0;
  for (int k = 1; k <= g.order(); ++k) {
    std::vector<std::uint8_t> color(static_cast<std::size_t>(g.order()), 0);
    if (brute_force_extend(g, k, 0, color, 0)) return k;
  }
  return g.order();  // unreachable: order colors always suffice
}

GraphChiResult exact_chi(const SolverGraph& g, const SearchBudget& budget) {
  validate_budget(budget);
  const auto start = Clock::now();
  GraphChiResult res;
  if (g.order() == 0) {
    res.decided = true;
    res.chi = 0;
    res.lower = res.upper = 0;
    res.witness = std::vector<std::uint8_t>{};
    return res;
  }
  if (g.edge_count() == 0) {
    res.decided = true;
    res.chi = 1;
    res.lower = res.upper = 1;
    res.witness = std::vector<std::uint8_t>(static_cast<std::size_t>(g.order()), 1);
    return res;
  }
  const BipartiteResult bip = is_bipartite(g);
  if (bip.bipartite) {
    std::vector<std::uint8_t> witness(static_cast<std::size_t>(g.order()), 1);
    // Rebuild the two sides with a fresh sweep.
    std::vector<std::int8_t> side(static_cast<std::size_t>(g.order()), -1);
    for (int root = 0; root < g.order(); ++root) {
      if (side[static_cast<std::size_t>(root)] >= 0) continue;
      side[static_cast<std::size_t>(root)] = 0;
      std::vector<int> queue{root};
      for (std::size_t head = 0; head < queue.size(); ++head) {
        for (std::int32_t u : g.adj(queue[head])) {
          if (side[static_cast<std::size_t>(u)] < 0) {
            side[static_cast<std::size_t>(u)] =
                static_cast<std::int8_t>(1 - side[static_cast<std::size_t>(queue[head])]);
            queue.push_back(u);
          }
        }
      }
    }
    for (int v = 0; v < g.order(); ++v) {
      witness[static_cast<std::size_t>(v)] =
          static_cast<std::uint8_t>(1 + side[static_cast<std::size_t>(v)]);
    }
    res.decided = true;
    res.chi = 2;
    res.lower = res.upper = 2;
    res.witness = std::move(witness);
    res.elapsed_seconds = seconds_since(start);
    return res;
  }
  res.lower = 3;
  int greedy_colors = 0;
  std::vector<std::uint8_t> greedy = greedy_assignment(g, greedy_colors);
  res.upper = greedy_colors;
  res.witness = std::move(greedy);
  for (int k = res.lower; k <= g.order(); ++k) {
    SearchBudget remaining = budget;
    remaining.max_seconds = budget.max_seconds - seconds_since(start);
    if (remaining.max_seconds <= 0.0 || res.nodes >= budget.max_nodes) {
      res.elapsed_seconds = seconds_since(start);
      return res;  // partial: lower bound k proven, upper bound from greedy
    }
    remaining.max_nodes = budget.max_nodes - res.nodes;
    const SolveOutcome out = find_k_coloring_complete(g, k, remaining);
    res.nodes += out.nodes;
    if (out.status == SolveStatus::colored) {
      res.decided = true;
      res.chi = k;
      res.upper = k;
      res.witness = out.assignment;
      break;
    }
    if (out.status == SolveStatus::timeout) {
      res.elapsed_seconds = seconds_since(start);
      return res;
    }
    res.lower = k + 1;
  }
  res.elapsed_seconds = seconds_since(start);
  return res;
}

ChiResult exact_chi(const PancakeView& view, const SearchBudget& budget) {
  validate_budget(budget);
  if (view.vertex_count() > kCompleteVertexCap) {
    throw capacity_error("exact chromatic number is limited to 5040 vertices");
  }
  const SolverGraph g = SolverGraph::from_view(view);
  const GraphChiResult raw = exact_chi(g, budget);
  ChiResult res;
  res.decided = raw.decided;
  res.lower = raw.lower;
  res.upper = raw.upper;
  res.chi = raw.chi;
  res.nodes = raw.nodes;
  res.elapsed_seconds = raw.elapsed_seconds;
  if (raw.witness) {
    const int k = std::max(1, res.upper);
    Coloring witness = coloring_from_assignment(view, k, *raw.witness);
    if (raw.decided) {
      const VerifyReport check = verify_proper(view, witness);
      if (!check.proper) {
        throw std::logic_error("solver produced an improper coloring");
      }
    }
    res.witness = std::move(witness);
  }
  return res;
}

}  // namespace pancake
