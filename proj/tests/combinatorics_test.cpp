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

#include <gtest/gtest.h>

namespace blossom {
namespace {

TEST(BinomialTest, TextbookValues) {
  EXPECT_EQ(binomial(5, 2), 10);
  EXPECT_EQ(binomial(7, 0), 1);
  EXPECT_EQ(binomial(7, 7), 1);
  EXPECT_EQ(binomial(0, 0), 1);
  EXPECT_EQ(binomial(64, 32), Integer("1832624140942590534"));
}

TEST(BinomialTest, OutOfRangeIsZero) {
  EXPECT_EQ(binomial(3, 5), 0);
  EXPECT_EQ(binomial(3, -1), 0);
  EXPECT_EQ(binomial(0, 1), 0);
}

TEST(BinomialTest, NegativeNRejected) { EXPECT_THROW(binomial(-1, 0), std::invalid_argument); }

TEST(BinomialTest, PascalRule) {
  for (int n = 2; n <= 64; ++n) {
    for (int k = 1; k <= n - 1; ++k) {
      ASSERT_EQ(binomial(n, k), binomial(n - 1, k - 1) + binomial(n - 1, k)) << n << "," << k;
    }
  }
}

TEST(MultinomialTest, Values) {
  EXPECT_EQ(multinomial(5, 2, 1), 30);
  EXPECT_EQ(multinomial(4, 0, 0), 1);
  EXPECT_EQ(multinomial(3, 1, 2), 3);
}

TEST(MultinomialTest, InvalidArgumentsRejected) {
  EXPECT_THROW(multinomial(3, 2, 2), std::invalid_argument);
  EXPECT_THROW(multinomial(3, -1, 0), std::invalid_argument);
  EXPECT_THROW(multinomial(3, 0, -1), std::invalid_argument);
}

TEST(MultinomialTest, FactorsIntoBinomials) {
  for (int total = 0; total <= 20; ++total) {
    for (int i = 0; i <= total; ++i) {
      for (int j = 0; i + j <= total; ++j) {
        ASSERT_EQ(multinomial(total, i, j), binomial(total, i) * binomial(total - i, j));
      }
    }
  }
}

}  // namespace
}  // namespace blossom
