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

#include "blossom/blossom_oracle.hpp"

#include <algorithm>
#include <stdexcept>

#include <gtest/gtest.h>

#include "blossom/combinatorics.hpp"
#include "blossom/evaluation.hpp"
#include "blossom/random_instances.hpp"
#include "test_support.hpp"

namespace blossom {
namespace {

using oracle::TensorBlossomArgs;
using testing::pt;
using testing::q;
using testing::scalar;

constexpr int kAxiomTrials = 60;

std::vector<Rational> random_args(InstanceGenerator& gen, int count) {
  std::vector<Rational> out;
  for (int k = 0; k < count; ++k) out.push_back(gen.rational());
  return out;
}

std::vector<Point2> random_points(InstanceGenerator& gen, int count) {
  std::vector<Point2> out;
  for (int k = 0; k < count; ++k) out.push_back(gen.point2());
  return out;
}

template <typename T>
void shuffle(std::vector<T>& values, InstanceGenerator& gen) {
  for (int k = static_cast<int>(values.size()) - 1; k > 0; --k) {
    std::swap(values[static_cast<std::size_t>(k)],
              values[static_cast<std::size_t>(gen.integer(0, k))]);
  }
}

TEST(MonomialBlossomCurveTest, Examples) {
  const std::vector<Rational> args{2, 3, 5};
  EXPECT_EQ(oracle::monomial_blossom_curve(0, args), Rational(1));
  EXPECT_EQ(oracle::monomial_blossom_curve(3, args), Rational(30));
  EXPECT_EQ(oracle::monomial_blossom_curve(1, args), q(10, 3));
  EXPECT_EQ(oracle::monomial_blossom_curve(0, std::vector<Rational>{}), Rational(1));
  EXPECT_THROW(oracle::monomial_blossom_curve(4, args), std::invalid_argument);
  EXPECT_THROW(oracle::monomial_blossom_curve(-1, args), std::invalid_argument);
}

TEST(BlossomCurveTest, Examples) {
  EXPECT_EQ(oracle::blossom_curve(MonomialCurve({pt(1, 2, 3)}), {}), pt(1, 2, 3));
  const MonomialCurve square({scalar(0), scalar(0), scalar(1)});
  EXPECT_EQ(oracle::blossom_curve(square, std::vector<Rational>{q(2, 3), -5}), scalar(q(-10, 3)));
  EXPECT_THROW(oracle::blossom_curve(square, std::vector<Rational>{1}), std::invalid_argument);
}

TEST(MonomialBlossomTensorTest, Examples) {
  const TensorBlossomArgs args{{2, 4}, {3, 5}};
  EXPECT_EQ(oracle::monomial_blossom_tensor(0, 0, args), Rational(1));
  EXPECT_EQ(oracle::monomial_blossom_tensor(2, 2, args), Rational(2 * 4 * 3 * 5));
  EXPECT_EQ(oracle::monomial_blossom_tensor(1, 1, args), Rational(12));
  EXPECT_EQ(oracle::monomial_blossom_tensor_enumerated(1, 1, args), Rational(12));
  EXPECT_THROW(oracle::monomial_blossom_tensor(3, 0, args), std::invalid_argument);
  EXPECT_THROW(oracle::monomial_blossom_tensor_enumerated(0, 3, args), std::invalid_argument);
}

TEST(MonomialBlossomTensorTest, ProductFormEqualsDoubleEnumeration) {
  InstanceGenerator gen(21);
  for (int n = 0; n <= 4; ++n) {
    for (int m = 0; m <= 4; ++m) {
      for (int trial = 0; trial < 3; ++trial) {
        const TensorBlossomArgs args{random_args(gen, n), random_args(gen, m)};
        for (int i = 0; i <= n; ++i) {
          for (int j = 0; j <= m; ++j) {
            ASSERT_EQ(oracle::monomial_blossom_tensor(i, j, args),
                      oracle::monomial_blossom_tensor_enumerated(i, j, args));
          }
        }
      }
    }
  }
}

TEST(BlossomTensorTest, ExampleSurfaceCorners) {
  const auto s = testing::example_surface();
  EXPECT_EQ(oracle::blossom_tensor(s, {{1, 1, 1}, {1, 1}}), pt(4, 3, q(3, 4)));
  EXPECT_EQ(oracle::blossom_tensor(s, {{0, 0, 0}, {0, 0}}), pt(0, 0, 0));
  EXPECT_THROW(oracle::blossom_tensor(s, {{0, 0}, {0, 0}}), std::invalid_argument);
}

TEST(MonomialBlossomTriangleTest, Examples) {
  const std::vector<Point2> two{{1, 2}, {3, 4}};
  EXPECT_EQ(oracle::monomial_blossom_triangle(0, 0, two), Rational(1));
  EXPECT_EQ(oracle::monomial_blossom_triangle(2, 0, two), Rational(3));
  EXPECT_EQ(oracle::monomial_blossom_triangle(1, 1, two), Rational(5));
  EXPECT_THROW(oracle::monomial_blossom_triangle(2, 1, two), std::invalid_argument);
  EXPECT_THROW(oracle::monomial_blossom_triangle(-1, 1, two), std::invalid_argument);
}

TEST(MonomialBlossomTriangleTest, PureIndicesReduceToUnivariateBlossoms) {
  InstanceGenerator gen(22);
  for (int total = 0; total <= 5; ++total) {
    const auto points = random_points(gen, total);
    std::vector<Rational> us;
    std::vector<Rational> vs;
    for (const auto& p : points) {
      us.push_back(p.s);
      vs.push_back(p.t);
    }
    for (int k = 0; k <= total; ++k) {
      EXPECT_EQ(oracle::monomial_blossom_triangle(k, 0, points), oracle::monomial_blossom_curve(k, us));
      EXPECT_EQ(oracle::monomial_blossom_triangle(0, k, points), oracle::monomial_blossom_curve(k, vs));
    }
  }
}

TEST(MonomialBlossomTriangleTest, VisitsMultinomialManySubsetPairs) {
  InstanceGenerator gen(23);
  for (int total = 0; total <= 7; ++total) {
    const auto points = random_points(gen, total);
    for (int i = 0; i <= total; ++i) {
      for (int j = 0; i + j <= total; ++j) {
        TermCounter counter;
        oracle::monomial_blossom_triangle(i, j, points, &counter);
        ASSERT_EQ(Integer(static_cast<unsigned long>(counter.terms)), multinomial(total, i, j));
      }
    }
  }
}

TEST(BlossomTriangleTest, ExampleSurfaceCorners) {
  const auto s = testing::example_surface();
  EXPECT_EQ(oracle::blossom_triangle(s, std::vector<Point2>(5, Point2{1, 0})), pt(4, 0, q(1, 5)));
  EXPECT_EQ(oracle::blossom_triangle(s, std::vector<Point2>(5, Point2{0, 1})), pt(0, 2, q(-4, 5)));
  EXPECT_THROW(oracle::blossom_triangle(s, std::vector<Point2>(4, Point2{0, 1})),
               std::invalid_argument);
}

// Axiom (i): invariance under permutation of the arguments.
TEST(BlossomAxiomsTest, Symmetry) {
  InstanceGenerator gen(31);
  for (int trial = 0; trial < kAxiomTrials; ++trial) {
    const int n = gen.integer(0, 4);
    const int m = gen.integer(0, 4);

    const auto curve = gen.curve(n);
    auto args = random_args(gen, n);
    const auto curve_value = oracle::blossom_curve(curve, args);
    shuffle(args, gen);
    EXPECT_EQ(oracle::blossom_curve(curve, args), curve_value);

    const auto surface = gen.surface(n, m);
    TensorBlossomArgs targs{random_args(gen, n), random_args(gen, m)};
    const auto tensor_value = oracle::blossom_tensor(surface, targs);
    shuffle(targs.u, gen);
    shuffle(targs.v, gen);
    EXPECT_EQ(oracle::blossom_tensor(surface, targs), tensor_value);

    auto points = random_points(gen, n + m);
    const auto triangle_value = oracle::blossom_triangle(surface, points);
    shuffle(points, gen);
    EXPECT_EQ(oracle::blossom_triangle(surface, points), triangle_value);
  }
}

// Axiom (ii): affine in each argument separately.
TEST(BlossomAxiomsTest, MultiAffinity) {
  InstanceGenerator gen(32);
  int checked = 0;
  while (checked < kAxiomTrials) {
    const int n = gen.integer(1, 4);
    const int m = gen.integer(1, 4);
    const Rational alpha = gen.rational();
    const Rational one_minus = Rational(1) - alpha;

    const auto curve = gen.curve(n);
    auto args = random_args(gen, n);
    const auto slot = static_cast<std::size_t>(gen.integer(0, n - 1));
    const Rational lo = gen.rational();
    const Rational hi = gen.rational();
    args[slot] = lo;
    const auto at_lo = oracle::blossom_curve(curve, args);
    args[slot] = hi;
    const auto at_hi = oracle::blossom_curve(curve, args);
    args[slot] = one_minus * lo + alpha * hi;
    EXPECT_EQ(oracle::blossom_curve(curve, args), at_lo * one_minus + at_hi * alpha);

    const auto surface = gen.surface(n, m);
    TensorBlossomArgs targs{random_args(gen, n), random_args(gen, m)};
    auto& side = gen.integer(0, 1) == 0 ? targs.u : targs.v;
    const auto tslot = static_cast<std::size_t>(gen.integer(0, static_cast<int>(side.size()) - 1));
    side[tslot] = lo;
    const auto t_lo = oracle::blossom_tensor(surface, targs);
    side[tslot] = hi;
    const auto t_hi = oracle::blossom_tensor(surface, targs);
    side[tslot] = one_minus * lo + alpha * hi;
    EXPECT_EQ(oracle::blossom_tensor(surface, targs), t_lo * one_minus + t_hi * alpha);

    auto points = random_points(gen, n + m);
    const auto pslot = static_cast<std::size_t>(gen.integer(0, n + m - 1));
    const Point2 p_lo = gen.point2();
    const Point2 p_hi = gen.point2();
    points[pslot] = p_lo;
    const auto tri_lo = oracle::blossom_triangle(surface, points);
    points[pslot] = p_hi;
    const auto tri_hi = oracle::blossom_triangle(surface, points);
    points[pslot] = {one_minus * p_lo.s + alpha * p_hi.s, one_minus * p_lo.t + alpha * p_hi.t};
    EXPECT_EQ(oracle::blossom_triangle(surface, points), tri_lo * one_minus + tri_hi * alpha);
    ++checked;
  }
}

// Axiom (iii): the blossom on the diagonal is the polynomial itself.
TEST(BlossomAxiomsTest, DiagonalReduction) {
  InstanceGenerator gen(33);
  for (int trial = 0; trial < kAxiomTrials; ++trial) {
    const int n = gen.integer(0, 4);
    const int m = gen.integer(0, 4);
    const auto u = gen.rational();
    const auto v = gen.rational();

    const auto curve = gen.curve(n);
    EXPECT_EQ(oracle::blossom_curve(curve, std::vector<Rational>(static_cast<std::size_t>(n), u)),
              eval_monomial_curve(curve, u));

    const auto surface = gen.surface(n, m);
    const TensorBlossomArgs targs{std::vector<Rational>(static_cast<std::size_t>(n), u),
                                  std::vector<Rational>(static_cast<std::size_t>(m), v)};
    EXPECT_EQ(oracle::blossom_tensor(surface, targs), eval_monomial_surface(surface, u, v));
    EXPECT_EQ(oracle::blossom_tensor_enumerated(surface, targs), eval_monomial_surface(surface, u, v));
    EXPECT_EQ(oracle::blossom_triangle(surface,
                                       std::vector<Point2>(static_cast<std::size_t>(n + m), {u, v})),
              eval_monomial_surface(surface, u, v));
  }
}

}  // namespace
}  // namespace blossom
