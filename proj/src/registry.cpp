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

#include "pancake/registry.hpp"

#include <stdexcept>

#include "pancake/constructive.hpp"
#include "pancake/quotient.hpp"

namespace pancake {

Coloring named_coloring(const std::string& method, int n) {
  if (n < 1 || n > kMaxN) {
    throw std::invalid_argument("named_coloring: n must be in [1, " + std::to_string(kMaxN) +
                                "], got " + std::to_string(n));
  }
  if (method == "first-element") {
    return Coloring(n, n, [](const Permutation& p) { return p.first(); }, "first-element");
  }
  if (method == "constant") {
    return Coloring(n, 1, [](const Permutation&) { return 1; }, "constant");
  }
  if (method == "parity2") {
    return Coloring(
        n, 2, [](const Permutation& p) { return parity(p) == Parity::even ? 1 : 2; }, "parity2");
  }
  if (method == "parity4") return parity4_coloring(n);
  if (method == "equitable-nm1") return lifted_coloring(n);
  throw std::invalid_argument("named_coloring: unknown method '" + method + "'");
}

std::vector<std::string> named_coloring_methods() {
  return {"first-element", "constant", "parity2", "parity4", "equitable-nm1"};
}

}  // namespace pancake
