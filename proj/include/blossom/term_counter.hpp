// Copyright 2026 The blossom-subdiv Authors
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

#include <cstdint>

namespace blossom {

/// Counts summand evaluations. Both subdivision routes accept an optional
/// counter so their costs can be compared independent of machine speed.
struct TermCounter {
  std::uint64_t terms = 0;

  void add(std::uint64_t count = 1) { terms += count; }
};

inline void count_term(TermCounter* counter, std::uint64_t count = 1) {
  if (counter != nullptr) counter->add(count);
}

}  // namespace blossom
