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

#include "pancake/permutation.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <sstream>
#include <stdexcept>

namespace pancake {

namespace {

constexpr std::uint64_t kFactorial[kMaxN + 1] = {
    1ull,
    1ull,
    2ull,
    6ull,
    24ull,
    120ull,
    720ull,
    5040ull,
    40320ull,
    362880ull,
    3628800ull,
    39916800ull,
    479001600ull,
    6227020800ull,
    87178291200ull,
    1307674368000ull,
    20922789888000ull,
    355687428096000ull,
    6402373705728000ull,
    121645100408832000ull,
    2432902008176640000ull};

}  // namespace

std::uint64_t factorial(int n) {
  if (n < 0 || n > kMaxN)
    throw std::out_of_range("factorial: n must be in [0, 20], got " + std::to_string(n));
  return kFactorial[n];
}

Permutation::Permutation(std::vector<std::uint8_t> entries) : entries_(std::move(entries)) {
  const int n = static_cast<int>(entries_.size());
  if (n < 1 || n > kMaxN)
    throw std::invalid_argument("permutation length must be in [1, 20], got " + std::to_string(n));
  std::uint32_t seen = 0;
  for (std::uint8_t v : entries_) {
    if (v < 1 || v > n)
      throw std::invalid_argument("permutation entry " + std::to_string(int(v)) +
                                  " out of [1, " + std::to_string(n) + "]");
    const std::uint32_t bit = 1u << (v - 1);
    if (seen & bit)
      throw std::invalid_argument("permutation repeats entry " + std::to_string(int(v)));
    seen |= bit;
  }
}

Permutation Permutation::identity(int n) {
  if (n < 1 || n > kMaxN)
    throw std::invalid_argument("identity: n must be in [1, 20], got " + std::to_string(n));
  std::vector<std::uint8_t> e(n);
  for (int i = 0; i < n; ++i) e[i] = static_cast<std::uint8_t>(i + 1);
  return Permutation(std::move(e));
}

Permutation Permutation::parse(const std::string& text) {
  std::string body = text;
  // trim
  while (!body.empty() && std::isspace(static_cast<unsigned char>(body.front()))) body.erase(body.begin());
  while (!body.empty() && std::isspace(static_cast<unsigned char>(body.back()))) body.pop_back();
  if (!body.empty() && body.front() == '[') {
    if (body.back() != ']')
      throw std::invalid_argument("unterminated '[' in permutation: " + text);
    body = body.substr(1, body.size() - 2);
  }
  if (body.empty()) throw std::invalid_argument("empty permutation text");

  std::vector<std::uint8_t> entries;
  if (body.find_first_of(" \t,") != std::string::npos) {
    std::string normalized = body;
    std::replace(normalized.begin(), normalized.end(), ',', ' ');
    std::istringstream iss(normalized);
    int v;
    while (iss >> v) {
      if (v < 1 || v > kMaxN)
        throw std::invalid_argument("permutation entry out of range in: " + text);
      entries.push_back(static_cast<std::uint8_t>(v));
    }
    if (!iss.eof()) throw std::invalid_argument("bad permutation text: " + text);
  } else {
    for (char ch : body) {
      if (!std::isdigit(static_cast<unsigned char>(ch)) || ch == '0')
        throw std::invalid_argument("bad permutation digit '" + std::string(1, ch) + "' in: " + text);
      entries.push_back(static_cast<std::uint8_t>(ch - '0'));
    }
  }
  return Permutation(std::move(entries));
}

void Permutation::reverse_prefix(int i) {
  if (i < 2 || i > size())
    throw std::out_of_range("reverse_prefix: i must be in [2, " + std::to_string(size()) +
                            "], got " + std::to_string(i));
  std::reverse(entries_.begin(), entries_.begin() + i);
}

std::string Permutation::str() const {
  std::string out = "[";
  if (size() <= 9) {
    for (std::uint8_t v : entries_) out += static_cast<char>('0' + v);
  } else {
    for (int i = 0; i < size(); ++i) {
      if (i) out += ' ';
      out += std::to_string(int(entries_[i]));
    }
  }
  out += ']';
  return out;
}

Permutation apply_reversal(const Permutation& p, int i) {
  Permutation q = p;
  q.reverse_prefix(i);
  return q;
}

Parity parity(const Permutation& p) {
  const int n = p.size();
  const auto& e = p.entries();
  std::uint32_t visited = 0;
  int transpositions = 0;
  for (int start = 0; start < n; ++start) {
    if (visited & (1u << start)) continue;
    int len = 0;
    int pos = start;
    while (!(visited & (1u << pos))) {
      visited |= 1u << pos;
      pos = e[pos] - 1;
      ++len;
    }
    transpositions += len - 1;
  }
  return (transpositions % 2 == 0) ? Parity::even : Parity::odd;
}

Parity reversal_parity(int i) {
  if (i < 2) throw std::out_of_range("reversal_parity: i must be >= 2, got " + std::to_string(i));
  const int m = i % 4;
  return (m == 0 || m == 1) ? Parity::even : Parity::odd;
}

Rank lex_rank(const Permutation& p) {
  const int n = p.size();
  const auto& e = p.entries();
  std::uint32_t seen = 0;
  Rank r = 0;
  for (int pos = 0; pos < n; ++pos) {
    const int v = e[pos];
    const std::uint32_t below = seen & ((1u << (v - 1)) - 1);
    const int smaller_remaining = (v - 1) - std::popcount(below);
    r += static_cast<Rank>(smaller_remaining) * kFactorial[n - pos - 1];
    seen |= 1u << (v - 1);
  }
  return r;
}

Permutation lex_unrank(Rank r, int n) {
  if (n < 1 || n > kMaxN)
    throw std::invalid_argument("lex_unrank: n must be in [1, 20], got " + std::to_string(n));
  if (r >= kFactorial[n])
    throw std::out_of_range("lex_unrank: rank " + std::to_string(r) + " >= " + std::to_string(n) + "!");
  std::vector<std::uint8_t> avail(n);
  for (int i = 0; i < n; ++i) avail[i] = static_cast<std::uint8_t>(i + 1);
  std::vector<std::uint8_t> out;
  out.reserve(n);
  for (int pos = 0; pos < n; ++pos) {
    const std::uint64_t f = kFactorial[n - pos - 1];
    const int idx = static_cast<int>(r / f);
    r %= f;
    out.push_back(avail[idx]);
    avail.erase(avail.begin() + idx);
  }
  return Permutation(std::move(out));
}

}  // namespace pancake
