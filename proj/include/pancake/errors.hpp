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

#include <stdexcept>
#include <string>

namespace pancake {

// Thrown when an operation would require enumerating a graph beyond the
// supported scale (full enumeration is capped at n = 12).
class capacity_error : public std::runtime_error {
 public:
  explicit capacity_error(const std::string& what) : std::runtime_error(what) {}
};

// Thrown when a vertex handed to a view operation is not a member of the view.
class membership_error : public std::domain_error {
 public:
  explicit membership_error(const std::string& what) : std::domain_error(what) {}
};

}  // namespace pancake
