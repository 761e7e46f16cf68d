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

#include "blossom/rational.hpp"

namespace blossom {

/// C(n, k). Zero when k lies outside [0, n]; throws std::invalid_argument
/// for negative n.
Integer binomial(int n, int k);

/// N! / (i! j! (N-i-j)!). Throws std::invalid_argument unless
/// i >= 0, j >= 0 and i + j <= N.
Integer multinomial(int total, int i, int j);

}  // namespace blossom
