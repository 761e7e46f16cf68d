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

#include <span>

#include "blossom/geometry.hpp"

namespace blossom {

/// Horner evaluation of sum_i c_i u^i.
Point3 eval_monomial_curve(const MonomialCurve& curve, const Rational& u);

/// Nested Horner evaluation of sum_i sum_j c_ij u^i v^j.
Point3 eval_monomial_surface(const MonomialSurface& surface, const Rational& u,
                             const Rational& v);

/// de Casteljau on an arbitrary control polygon at local parameter t.
Point3 de_casteljau(std::span<const Point3> control_points, const Rational& t);

/// Bernstein-form value at local parameter t in [0, 1] (the domain is
/// provenance only and is not used for reparameterization).
Point3 de_casteljau_curve(const BezierCurve& bezier, const Rational& t);

/// Rows (fixed nu) are reduced at v first, then the resulting column at u.
Point3 de_casteljau_tensor(const TensorPatch& patch, const Rational& u, const Rational& v);

/// Evaluates at barycentric weights (u, v, 1 - u - v) attached to the
/// nu, mu and remaining indices respectively.
Point3 de_casteljau_triangle(const TrianglePatch& patch, const Rational& u, const Rational& v);

/// u * a + v * b + (1 - u - v) * c
Point2 barycentric_to_cartesian(const DomainTriangle& tri, const Rational& u, const Rational& v);

}  // namespace blossom
