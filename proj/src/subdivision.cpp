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

#include "blossom/subdivision.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <vector>

#include "blossom/combinatorics.hpp"

namespace blossom {
namespace {

/// base^0 .. base^max_exponent.
class Powers {
 public:
  Powers(const Rational& base, int max_exponent) {
    table_.reserve(static_cast<std::size_t>(max_exponent + 1));
    table_.emplace_back(1);
    for (int e = 1; e <= max_exponent; ++e) table_.push_back(table_.back() * base);
  }

  const Rational& operator[](int exponent) const {
    return table_.at(static_cast<std::size_t>(exponent));
  }

 private:
  std::vector<Rational> table_;
};

Rational as_rational(const Integer& value) { return Rational(value); }

void require_point_index(int index, int max, const char* what) {
  if (index < 0 || index > max) {
    throw std::out_of_range(std::string(what) + ": index " + std::to_string(index) +
                            " outside [0, " + std::to_string(max) + "]");
  }
}

/// sum_k C(nu, k) C(n - nu, i - k) hi^k lo^(i - k), k in [max(0, i + nu - n), min(i, nu)].
Rational split_sum(int n, int nu, int i, const Powers& hi, const Powers& lo,
                   TermCounter* counter) {
  Rational sum;
  for (int k = std::max(0, i + nu - n); k <= std::min(i, nu); ++k) {
    sum += as_rational(binomial(nu, k) * binomial(n - nu, i - k)) * hi[k] * lo[i - k];
    count_term(counter);
  }
  return sum;
}

}  // namespace

TriangularLoopBounds::TriangularLoopBounds(int total_degree, int nu, int mu, int i, int j)
    : total_(total_degree), nu_(nu), mu_(mu), i_(i), j_(j), lambda_(total_degree - nu - mu) {
  if (nu < 0 || mu < 0 || lambda_ < 0 || i < 0 || j < 0 || i + j > total_degree) {
    throw std::invalid_argument("TriangularLoopBounds: invalid (N, nu, mu, i, j) = (" +
                                std::to_string(total_degree) + ", " + std::to_string(nu) + ", " +
                                std::to_string(mu) + ", " + std::to_string(i) + ", " +
                                std::to_string(j) + ")");
  }
}

IndexRange TriangularLoopBounds::i_alpha() const {
  return {std::max(0, i_ + nu_ - total_), std::min(i_, nu_)};
}

IndexRange TriangularLoopBounds::i_beta(int i_alpha) const {
  return {std::max(0, i_ - i_alpha - lambda_), std::min(i_ - i_alpha, mu_)};
}

IndexRange TriangularLoopBounds::j_alpha(int i_alpha, int i_beta) const {
  const int ig = i_gamma(i_alpha, i_beta);
  return {std::max(0, j_ - (mu_ - i_beta) - (lambda_ - ig)), std::min(j_, nu_ - i_alpha)};
}

IndexRange TriangularLoopBounds::j_beta(int i_alpha, int i_beta, int j_alpha) const {
  const int ig = i_gamma(i_alpha, i_beta);
  return {std::max(0, j_ - j_alpha - (lambda_ - ig)), std::min(j_ - j_alpha, mu_ - i_beta)};
}

Integer assignment_count_u_first(int nu, int mu, int total_degree, const ZoneCounts& z) {
  const int lambda = total_degree - nu - mu;
  if (lambda < 0 || nu - z.i_alpha < 0 || mu - z.i_beta < 0 || lambda - z.i_gamma < 0) return 0;
  return binomial(nu, z.i_alpha) * binomial(mu, z.i_beta) * binomial(lambda, z.i_gamma) *
         binomial(nu - z.i_alpha, z.j_alpha) * binomial(mu - z.i_beta, z.j_beta) *
         binomial(lambda - z.i_gamma, z.j_gamma);
}

Integer assignment_count_v_first(int nu, int mu, int total_degree, const ZoneCounts& z) {
  const int lambda = total_degree - nu - mu;
  if (lambda < 0 || nu - z.j_alpha < 0 || mu - z.j_beta < 0 || lambda - z.j_gamma < 0) return 0;
  return binomial(nu, z.j_alpha) * binomial(mu, z.j_beta) * binomial(lambda, z.j_gamma) *
         binomial(nu - z.j_alpha, z.i_alpha) * binomial(mu - z.j_beta, z.i_beta) *
         binomial(lambda - z.j_gamma, z.i_gamma);
}

Point3 curve_control_point(const MonomialCurve& curve, const ParamInterval& interval, int nu,
                           TermCounter* counter) {
  const int n = curve.degree();
  require_point_index(nu, n, "curve_control_point");
  const Powers a(interval.a, n);
  const Powers b(interval.b, n);
  Point3 w;
  for (int i = 0; i <= n; ++i) {
    const Rational inner = split_sum(n, nu, i, b, a, counter);
    w += curve.coeff(i) * (inner / as_rational(binomial(n, i)));
  }
  return w;
}

Point3 tensor_control_point(const MonomialSurface& surface, const ParamRect& rect, int nu,
                            int mu, TermCounter* counter) {
  const int n = surface.degree_u();
  const int m = surface.degree_v();
  require_point_index(nu, n, "tensor_control_point (nu)");
  require_point_index(mu, m, "tensor_control_point (mu)");
  const Powers a(rect.u.a, n);
  const Powers b(rect.u.b, n);
  const Powers c(rect.v.a, m);
  const Powers d(rect.v.b, m);
  Point3 p;
  for (int i = 0; i <= n; ++i) {
    for (int j = 0; j <= m; ++j) {
      Rational sum;
      for (int k = std::max(0, i + nu - n); k <= std::min(i, nu); ++k) {
        const Integer u_count = binomial(nu, k) * binomial(n - nu, i - k);
        const Rational u_term = b[k] * a[i - k];
        for (int r = std::max(0, j + mu - m); r <= std::min(j, mu); ++r) {
          const Integer count = u_count * binomial(mu, r) * binomial(m - mu, j - r);
          sum += as_rational(count) * u_term * d[r] * c[j - r];
          count_term(counter);
        }
      }
      p += surface.coeff(i, j) * (sum / as_rational(binomial(n, i) * binomial(m, j)));
    }
  }
  return p;
}

Point3 triangle_control_point(const MonomialSurface& surface, const DomainTriangle& tri, int nu,
                              int mu, TermCounter* counter) {
  const int n = surface.degree_u();
  const int m = surface.degree_v();
  const int total = n + m;
  require_point_index(nu, total, "triangle_control_point (nu)");
  require_point_index(mu, total - nu, "triangle_control_point (mu)");
  const Powers a1(tri.a.s, total);
  const Powers b1(tri.b.s, total);
  const Powers c1(tri.c.s, total);
  const Powers a2(tri.a.t, total);
  const Powers b2(tri.b.t, total);
  const Powers c2(tri.c.t, total);
  Point3 q;
  for (int i = 0; i <= n; ++i) {
    for (int j = 0; j <= m; ++j) {
      Rational sum;
      TriangularLoopBounds(total, nu, mu, i, j).for_each([&](const ZoneCounts& z) {
        sum += as_rational(assignment_count_u_first(nu, mu, total, z)) * a1[z.i_alpha] *
               b1[z.i_beta] * c1[z.i_gamma] * a2[z.j_alpha] * b2[z.j_beta] * c2[z.j_gamma];
        count_term(counter);
      });
      q += surface.coeff(i, j) * (sum / as_rational(multinomial(total, i, j)));
    }
  }
  return q;
}

BezierCurve subdivide_curve(const MonomialCurve& curve, const ParamInterval& interval,
                            TermCounter* counter) {
  std::vector<Point3> points;
  points.reserve(static_cast<std::size_t>(curve.degree() + 1));
  for (int nu = 0; nu <= curve.degree(); ++nu) {
    points.push_back(curve_control_point(curve, interval, nu, counter));
  }
  return BezierCurve(std::move(points), interval);
}

TensorPatch subdivide_tensor(const MonomialSurface& surface, const ParamRect& rect,
                             TermCounter* counter) {
  const int n = surface.degree_u();
  const int m = surface.degree_v();
  std::vector<Point3> points;
  points.reserve(static_cast<std::size_t>((n + 1) * (m + 1)));
  for (int nu = 0; nu <= n; ++nu) {
    for (int mu = 0; mu <= m; ++mu) {
      points.push_back(tensor_control_point(surface, rect, nu, mu, counter));
    }
  }
  return TensorPatch(n, m, std::move(points), rect);
}

TrianglePatch subdivide_triangle(const MonomialSurface& surface, const DomainTriangle& tri,
                                 TermCounter* counter) {
  const int total = surface.total_degree();
  std::vector<Point3> points;
  points.reserve(TrianglePatch::point_count(total));
  for (int nu = 0; nu <= total; ++nu) {
    for (int mu = 0; nu + mu <= total; ++mu) {
      points.push_back(triangle_control_point(surface, tri, nu, mu, counter));
    }
  }
  return TrianglePatch(total, std::move(points), tri);
}

}  // namespace blossom
