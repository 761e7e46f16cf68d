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

#include "blossom/random_instances.hpp"

#include <vector>

namespace blossom {

int InstanceGenerator::integer(int lo, int hi) {
  return std::uniform_int_distribution<int>(lo, hi)(engine_);
}

Rational InstanceGenerator::rational() {
  const int num = integer(-9, 9);
  int den = integer(-9, 8);
  if (den >= 0) ++den;
  return Rational(num) / Rational(den);
}

MonomialCurve InstanceGenerator::curve(int degree) {
  std::vector<Point3> coeffs;
  for (int i = 0; i <= degree; ++i) coeffs.push_back(point3());
  return MonomialCurve(std::move(coeffs));
}

MonomialSurface InstanceGenerator::surface(int n, int m) {
  std::vector<Point3> coeffs;
  for (int k = 0; k < (n + 1) * (m + 1); ++k) coeffs.push_back(point3());
  return MonomialSurface(n, m, std::move(coeffs));
}

}  // namespace blossom
