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

#include "blossom/evaluation.hpp"

#include <stdexcept>
#include <vector>

namespace blossom {

Point3 eval_monomial_curve(const MonomialCurve& curve, const Rational& u) {
  Point3 acc = curve.coeff(curve.degree());
  for (int i = curve.degree() - 1; i >= 0; --i) {
    acc *= u;
    acc += curve.coeff(i);
  }
  return acc;
}

Point3 eval_monomial_surface(const MonomialSurface& surface, const Rational& u,
                             const Rational& v) {
  const int n = surface.degree_u();
  const int m = surface.degree_v();
  auto row_at_v = [&](int i) {
    Point3 acc = surface.coeff(i, m);
    for (int j = m - 1; j >= 0; --j) {
      acc *= v;
      acc += surface.coeff(i, j);
    }
    return acc;
  };
  Point3 acc = row_at_v(n);
  for (int i = n - 1; i >= 0; --i) {
    acc *= u;
    acc += row_at_v(i);
  }
  return acc;
}

Point3 de_casteljau(std::span<const Point3> control_points, const Rational& t) {
  if (control_points.empty()) throw std::invalid_argument("de_casteljau: empty polygon");
  std::vector<Point3> work(control_points.begin(), control_points.end());
  for (std::size_t level = work.size() - 1; level > 0; --level) {
    for (std::size_t k = 0; k < level; ++k) work[k] = lerp(work[k], work[k + 1], t);
  }
  return work.front();
}

Point3 de_casteljau_curve(const BezierCurve& bezier, const Rational& t) {
  return de_casteljau(bezier.control_points(), t);
}

Point3 de_casteljau_tensor(const TensorPatch& patch, const Rational& u, const Rational& v) {
  const auto row_len = static_cast<std::size_t>(patch.degree_v() + 1);
  const auto points = patch.control_points();
  std::vector<Point3> column;
  column.reserve(static_cast<std::size_t>(patch.degree_u() + 1));
  for (int nu = 0; nu <= patch.degree_u(); ++nu) {
    column.push_back(
        de_casteljau(points.subspan(static_cast<std::size_t>(nu) * row_len, row_len), v));
  }
  return de_casteljau(column, u);
}

Point3 de_casteljau_triangle(const TrianglePatch& patch, const Rational& u, const Rational& v) {
  const Rational w = Rational(1) - u - v;
  const auto points = patch.control_points();
  std::vector<Point3> work(points.begin(), points.end());
  for (int level = patch.degree(); level > 0; --level) {
    // work holds a degree-`level` net in the same row-major layout; reduce in place
    // to degree level - 1. Each target index precedes the sources it reads.
    for (int nu = 0; nu < level; ++nu) {
      for (int mu = 0; nu + mu < level; ++mu) {
        const auto dst = TrianglePatch::index(level - 1, nu, mu);
        Point3 next = work[TrianglePatch::index(level, nu + 1, mu)] * u;
        next += work[TrianglePatch::index(level, nu, mu + 1)] * v;
        next += work[TrianglePatch::index(level, nu, mu)] * w;
        work[dst] = std::move(next);
      }
    }
  }
  return work.front();
}

Point2 barycentric_to_cartesian(const DomainTriangle& tri, const Rational& u, const Rational& v) {
  const Rational w = Rational(1) - u - v;
  return {u * tri.a.s + v * tri.b.s + w * tri.c.s, u * tri.a.t + v * tri.b.t + w * tri.c.t};
}

}  // namespace blossom
