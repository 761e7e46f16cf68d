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

#include "blossom/geometry.hpp"
#include "blossom/term_counter.hpp"

namespace blossom {

/// Inclusive integer range; empty when lo > hi.
struct IndexRange {
  int lo;
  int hi;

  bool empty() const { return lo > hi; }
  int size() const { return empty() ? 0 : hi - lo + 1; }
  friend bool operator==(const IndexRange&, const IndexRange&) = default;
};

/// How the i u-slots and j v-slots of a triangle monomial blossom are split
/// across the three vertex zones: [1, nu] holds vertex a, (nu, nu + mu] holds
/// b, the remaining lambda = N - nu - mu slots hold c.
struct ZoneCounts {
  int i_alpha = 0;
  int i_beta = 0;
  int i_gamma = 0;
  int j_alpha = 0;
  int j_beta = 0;
  int j_gamma = 0;

  friend bool operator==(const ZoneCounts&, const ZoneCounts&) = default;
  friend auto operator<=>(const ZoneCounts&, const ZoneCounts&) = default;
};

/// Summation bounds for one (nu, mu, i, j) term of the triangular closed
/// form. Ranges are produced incrementally: each inner range depends on the
/// outer indices already fixed.
class TriangularLoopBounds {
 public:
  /// Throws std::invalid_argument unless 0 <= nu, 0 <= mu, nu + mu <= N,
  /// 0 <= i, 0 <= j and i + j <= N.
  TriangularLoopBounds(int total_degree, int nu, int mu, int i, int j);

  int lambda() const { return lambda_; }

  IndexRange i_alpha() const;
  IndexRange i_beta(int i_alpha) const;
  IndexRange j_alpha(int i_alpha, int i_beta) const;
  IndexRange j_beta(int i_alpha, int i_beta, int j_alpha) const;

  int i_gamma(int i_alpha, int i_beta) const { return i_ - i_alpha - i_beta; }
  int j_gamma(int j_alpha, int j_beta) const { return j_ - j_alpha - j_beta; }

  /// Visits every admissible split, outer to inner: i_alpha, i_beta,
  /// j_alpha, j_beta.
  template <typename Visit>
  void for_each(Visit&& visit) const {
    const IndexRange ia = i_alpha();
    for (int a = ia.lo; a <= ia.hi; ++a) {
      const IndexRange ib = i_beta(a);
      for (int b = ib.lo; b <= ib.hi; ++b) {
        const IndexRange ja = j_alpha(a, b);
        for (int c = ja.lo; c <= ja.hi; ++c) {
          const IndexRange jb = j_beta(a, b, c);
          for (int d = jb.lo; d <= jb.hi; ++d) {
            visit(ZoneCounts{a, b, i_gamma(a, b), c, d, j_gamma(c, d)});
          }
        }
      }
    }
  }

 private:
  int total_;
  int nu_;
  int mu_;
  int i_;
  int j_;
  int lambda_;
};

/// Number of (u-subset, v-subset) index pairs with the given zone split,
/// choosing the u-slots first:
///   C(nu, ia) C(mu, ib) C(lambda, ig) C(nu - ia, ja) C(mu - ib, jb) C(lambda - ig, jg).
/// Out-of-range binomials make the product zero.
Integer assignment_count_u_first(int nu, int mu, int total_degree, const ZoneCounts& zones);

/// The same count with the v-slots chosen first:
///   C(nu, ja) C(mu, jb) C(lambda, jg) C(nu - ja, ia) C(mu - jb, ib) C(lambda - jg, ig).
Integer assignment_count_v_first(int nu, int mu, int total_degree, const ZoneCounts& zones);

// Closed-form control points. Each point is computed independently of the
// others from the monomial coefficients and the domain parameters.

Point3 curve_control_point(const MonomialCurve& curve, const ParamInterval& interval, int nu,
                           TermCounter* counter = nullptr);
Point3 tensor_control_point(const MonomialSurface& surface, const ParamRect& rect, int nu,
                            int mu, TermCounter* counter = nullptr);
Point3 triangle_control_point(const MonomialSurface& surface, const DomainTriangle& tri, int nu,
                              int mu, TermCounter* counter = nullptr);

/// Bezier form of `curve` restricted to [a, b]: w_nu = blossom(b^nu, a^(n-nu)).
BezierCurve subdivide_curve(const MonomialCurve& curve, const ParamInterval& interval,
                            TermCounter* counter = nullptr);

/// Tensor-product Bezier form of `surface` over [a, b] x [c, d].
TensorPatch subdivide_tensor(const MonomialSurface& surface, const ParamRect& rect,
                             TermCounter* counter = nullptr);

/// Triangular Bezier form of total degree n + m over the triangle abc.
TrianglePatch subdivide_triangle(const MonomialSurface& surface, const DomainTriangle& tri,
                                 TermCounter* counter = nullptr);

}  // namespace blossom
