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
#include <random>

#include "blossom/geometry.hpp"

namespace blossom {

/// Seeded source of small random rationals and polynomial instances.
/// Numerators and denominators are drawn from [-9, 9] (denominator != 0).
class InstanceGenerator {
 public:
  explicit InstanceGenerator(std::uint64_t seed) : engine_(seed) {}

  int integer(int lo, int hi);
  Rational rational();
  Point2 point2() { return {rational(), rational()}; }
  Point3 point3() { return {rational(), rational(), rational()}; }

  MonomialCurve curve(int degree);
  MonomialSurface surface(int n, int m);
  ParamInterval interval() { return {rational(), rational()}; }
  ParamRect rect() { return {interval(), interval()}; }
  DomainTriangle triangle() { return {point2(), point2(), point2()}; }

 private:
  std::mt19937_64 engine_;
};

}  // namespace blossom
