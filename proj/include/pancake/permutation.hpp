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

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace pancake {

// Permutation arithmetic is exact up to n = 20 (20! still fits in 64 bits);
// anything that enumerates a whole graph is capped at n = 12.
inline constexpr int kMaxN = 20;
inline constexpr int kMaxEnumN = 12;

std::uint64_t factorial(int n);

// Lexicographic index of a permutation among all of Sym_n, 0-based.
using Rank = std::uint64_t;

enum class Parity : std::uint8_t { even, odd };

// A permutation of [n] in one-line notation [p_1 p_2 ... p_n].
// Positions and values are 1-based; entries() exposes the raw 0-based store.
class Permutation {
 public:
  explicit Permutation(std::vector<std::uint8_t> entries);
  static Permutation identity(int n);

  // Accepts "[14352]", "[1 4 3 5 2]" or "1 4 3 5 2".
  static Permutation parse(const std::string& text);

  int size() const { return static_cast<int>(entries_.size()); }
  int at(int pos) const { return entries_[pos - 1]; }  // 1-based
  int first() const { return entries_.front(); }
  int last() const { return entries_.back(); }
  const std::vector<std::uint8_t>& entries() const { return entries_; }

  // In-place prefix reversal r_i, 2 <= i <= n.
  void reverse_prefix(int i);

  // Bracket form; contiguous digits for n <= 9, space-separated above.
  std::string str() const;

  auto operator<=>(const Permutation&) const = default;

 private:
  std::vector<std::uint8_t> entries_;
};

// p with its first i entries reversed; p itself is unchanged.
Permutation apply_reversal(const Permutation& p, int i);

// Sign of p, computed from its cycle decomposition.
Parity parity(const Permutation& p);

// Sign of the prefix reversal r_i as a permutation: even iff i = 0,1 (mod 4).
Parity reversal_parity(int i);

Rank lex_rank(const Permutation& p);
Permutation lex_unrank(Rank r, int n);

}  // namespace pancake
