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

#include <cstddef>
#include <span>
#include <vector>

#include "blossom/rational.hpp"

namespace blossom {

struct Point3 {
  Rational x;
  Rational y;
  Rational z;

  Point3& operator+=(const Point3& rhs);
  Point3& operator-=(const Point3& rhs);
  Point3& operator*=(const Rational& scale);

  friend Point3 operator+(Point3 lhs, const Point3& rhs) { return lhs += rhs; }
  friend Point3 operator-(Point3 lhs, const Point3& rhs) { return lhs -= rhs; }
  friend Point3 operator*(Point3 lhs, const Rational& scale) { return lhs *= scale; }
  friend Point3 operator*(const Rational& scale, Point3 rhs) { return rhs *= scale; }
  friend bool operator==(const Point3&, const Point3&) = default;
};

/// Parameter-plane point.
struct Point2 {
  Rational s;
  Rational t;

  friend bool operator==(const Point2&, const Point2&) = default;
};

/// (1 - t) * p + t * q
Point3 lerp(const Point3& p, const Point3& q, const Rational& t);

// Subdivision domains. No ordering or non-degeneracy is enforced: a == b and
// a > b intervals are valid, and so are collinear triangles.

struct ParamInterval {
  Rational a;
  Rational b;

  friend bool operator==(const ParamInterval&, const ParamInterval&) = default;
};

struct ParamRect {
  ParamInterval u;
  ParamInterval v;

  friend bool operator==(const ParamRect&, const ParamRect&) = default;
};

struct DomainTriangle {
  Point2 a;
  Point2 b;
  Point2 c;

  friend bool operator==(const DomainTriangle&, const DomainTriangle&) = default;
};

/// True when the three vertices are collinear (including coincident).
bool is_degenerate(const DomainTriangle& tri);

/// C(u) = sum_i c_i u^i.
class MonomialCurve {
 public:
  /// Throws std::invalid_argument on an empty coefficient list.
  explicit MonomialCurve(std::vector<Point3> coeffs);

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  const Point3& coeff(int i) const { return coeffs_.at(static_cast<std::size_t>(i)); }
  std::span<const Point3> coeffs() const { return coeffs_; }

  friend bool operator==(const MonomialCurve&, const MonomialCurve&) = default;

 private:
  std::vector<Point3> coeffs_;
};

/// S(u, v) = sum_i sum_j c_ij u^i v^j, stored i-major.
class MonomialSurface {
 public:
  /// Throws std::invalid_argument unless coeffs.size() == (n + 1) * (m + 1).
  MonomialSurface(int n, int m, std::vector<Point3> coeffs);

  int degree_u() const { return n_; }
  int degree_v() const { return m_; }
  int total_degree() const { return n_ + m_; }
  const Point3& coeff(int i, int j) const;
  std::span<const Point3> coeffs() const { return coeffs_; }

  friend bool operator==(const MonomialSurface&, const MonomialSurface&) = default;

 private:
  int n_;
  int m_;
  std::vector<Point3> coeffs_;
};

/// Bernstein-form curve over `domain`.
class BezierCurve {
 public:
  BezierCurve(std::vector<Point3> control_points, ParamInterval domain = {0, 1});

  int degree() const { return static_cast<int>(points_.size()) - 1; }
  const Point3& at(int nu) const { return points_.at(static_cast<std::size_t>(nu)); }
  std::span<const Point3> control_points() const { return points_; }
  const ParamInterval& domain() const { return domain_; }

  friend bool operator==(const BezierCurve&, const BezierCurve&) = default;

 private:
  std::vector<Point3> points_;
  ParamInterval domain_;
};

/// Tensor-product Bezier patch of bidegree (n, m); points stored nu-major.
class TensorPatch {
 public:
  TensorPatch(int n, int m, std::vector<Point3> control_points,
              ParamRect domain = {{0, 1}, {0, 1}});

  int degree_u() const { return n_; }
  int degree_v() const { return m_; }
  const Point3& at(int nu, int mu) const;
  std::span<const Point3> control_points() const { return points_; }
  const ParamRect& domain() const { return domain_; }

  friend bool operator==(const TensorPatch&, const TensorPatch&) = default;

 private:
  int n_;
  int m_;
  std::vector<Point3> points_;
  ParamRect domain_;
};

/// Triangular Bezier patch of total degree N. Point q(nu, mu) pairs with the
/// barycentric monomial u^nu v^mu (1-u-v)^(N-nu-mu), i.e. nu copies of domain
/// vertex a, mu of b and the rest of c. Storage is row-major by nu then mu.
class TrianglePatch {
 public:
  TrianglePatch(int total_degree, std::vector<Point3> control_points,
                DomainTriangle domain = {{1, 0}, {0, 1}, {0, 0}});

  static std::size_t point_count(int total_degree);
  /// Storage offset of (nu, mu); throws std::out_of_range when nu + mu > N.
  static std::size_t index(int total_degree, int nu, int mu);

  int degree() const { return degree_; }
  const Point3& at(int nu, int mu) const { return points_[index(degree_, nu, mu)]; }
  std::span<const Point3> control_points() const { return points_; }
  const DomainTriangle& domain() const { return domain_; }

  friend bool operator==(const TrianglePatch&, const TrianglePatch&) = default;

 private:
  int degree_;
  std::vector<Point3> points_;
  DomainTriangle domain_;
};

}  // namespace blossom
