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

// Brute-force blossoms of monomial curves and surfaces, evaluated by literal
// enumeration of distinct-index subsets. Cost is combinatorial by design;
// these routines are the reference the closed-form subdivision is checked
// against and must not share code with it.

#include <span>
#include <vector>

#include "blossom/geometry.hpp"
#include "blossom/term_counter.hpp"

namespace blossom::oracle {

struct TensorBlossomArgs {
  std::vector<Rational> u;  // n values
  std::vector<Rational> v;  // m values
};

/// Blossom of u^i in n = args.size() variables:
///   (1 / C(n, i)) * sum over i-subsets A of {1..n} of prod_{a in A} u_a.
/// Throws std::invalid_argument unless 0 <= i <= n.
Rational monomial_blossom_curve(int i, std::span<const Rational> args,
                                TermCounter* counter = nullptr);

/// Throws std::invalid_argument unless args.size() == curve.degree().
Point3 blossom_curve(const MonomialCurve& curve, std::span<const Rational> args,
                     TermCounter* counter = nullptr);

/// Blossom of u^i v^j as the product of the two univariate blossoms.
Rational monomial_blossom_tensor(int i, int j, const TensorBlossomArgs& args,
                                 TermCounter* counter = nullptr);

/// Same value by a direct double enumeration over (u-subset, v-subset) pairs.
/// Used to cross-check the product form and as the enumeration baseline in
/// benchmarks.
Rational monomial_blossom_tensor_enumerated(int i, int j, const TensorBlossomArgs& args,
                                            TermCounter* counter = nullptr);

/// Throws std::invalid_argument unless the argument lengths are (n, m).
Point3 blossom_tensor(const MonomialSurface& surface, const TensorBlossomArgs& args,
                      TermCounter* counter = nullptr);
Point3 blossom_tensor_enumerated(const MonomialSurface& surface, const TensorBlossomArgs& args,
                                 TermCounter* counter = nullptr);

/// Blossom of u^i v^j in N = args.size() point arguments:
///   (1 / multinomial(N, i, j)) * sum over disjoint (A, B), |A| = i, |B| = j,
///   of prod_{a in A} u_a * prod_{b in B} v_b.
/// Throws std::invalid_argument unless i, j >= 0 and i + j <= N.
Rational monomial_blossom_triangle(int i, int j, std::span<const Point2> args,
                                   TermCounter* counter = nullptr);

/// Throws std::invalid_argument unless args.size() == n + m.
Point3 blossom_triangle(const MonomialSurface& surface, std::span<const Point2> args,
                        TermCounter* counter = nullptr);

// Control points obtained by evaluating the blossom at the repeated domain
// parameters, one blossom evaluation per control point.

BezierCurve subdivide_curve(const MonomialCurve& curve, const ParamInterval& interval,
                            TermCounter* counter = nullptr);

enum class TensorForm { kProduct, kEnumerated };

TensorPatch subdivide_tensor(const MonomialSurface& surface, const ParamRect& rect,
                             TensorForm form = TensorForm::kProduct,
                             TermCounter* counter = nullptr);

TrianglePatch subdivide_triangle(const MonomialSurface& surface, const DomainTriangle& tri,
                                 TermCounter* counter = nullptr);

}  // namespace blossom::oracle
