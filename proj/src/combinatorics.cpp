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

#include "blossom/combinatorics.hpp"

#include <stdexcept>
#include <string>

namespace blossom {
namespace {

Integer factorial(int n) {
  Integer result;
  mpz_fac_ui(result.get_mpz_t(), static_cast<unsigned long>(n));
  return result;
}

}  // namespace

Integer binomial(int n, int k) {
  if (n < 0) throw std::invalid_argument("binomial: negative n " + std::to_string(n));
  if (k < 0 || k > n) return 0;
  Integer result;
  mpz_bin_uiui(result.get_mpz_t(), static_cast<unsigned long>(n),
               static_cast<unsigned long>(k));
  return result;
}

Integer multinomial(int total, int i, int j) {
  if (i < 0 || j < 0 || i + j > total) {
    throw std::invalid_argument("multinomial: invalid (" + std::to_string(total) + ", " +
                                std::to_string(i) + ", " + std::to_string(j) + ")");
  }
  Integer denom = factorial(i) * factorial(j) * factorial(total - i - j);
  return factorial(total) / denom;
}

}  // namespace blossom
