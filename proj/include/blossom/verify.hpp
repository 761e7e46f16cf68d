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
#include <optional>
#include <string>
#include <vector>

#include "blossom/documents.hpp"

namespace blossom {

struct VerifyOptions {
  int trials = 100;
  int max_degree = 3;
  std::uint64_t seed = 42;
};

struct ShapeTally {
  std::string shape;
  int cases = 0;
  std::uint64_t control_points = 0;
};

struct VerifyReport {
  std::vector<ShapeTally> tallies;  // curve, tpb, tb
  std::optional<Json> counterexample;

  bool passed() const { return !counterexample.has_value(); }
};

/// Draws `trials` random curves, surfaces and domains (degrees uniform in
/// [0, max_degree]) and compares every closed-form control point with the
/// enumerated blossom value. Stops at the first mismatch.
/// Throws std::invalid_argument when trials < 1 or max_degree < 0.
VerifyReport run_verification(const VerifyOptions& options);

}  // namespace blossom
