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

#include <string>
#include <vector>

#include "pancake/coloring.hpp"

namespace pancake {

// The built-in functional colorings, addressable by name:
//   first-element   color = pi_1, k = n (proper, equitable, perfect)
//   constant        the all-ones 1-coloring (proper only on edgeless graphs)
//   parity2         permutation parity, k = 2 (proper exactly for n <= 3)
//   parity4         the optimal 4-coloring of P_5..P_7
//   equitable-nm1   the lifted (n-1)-coloring from the quotient construction
// Unknown names raise std::invalid_argument, as do n outside the method's
// domain (parity4 needs 5 <= n <= 7, equitable-nm1 needs n >= 3).
Coloring named_coloring(const std::string& method, int n);

std::vector<std::string> named_coloring_methods();

}  // namespace pancake
