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

#include "blossom/geometry.hpp"

#include <stdexcept>
#include <string>

namespace blossom {
namespace {

void require_size(std::size_t actual, std::size_t expected, const char* what) {
  if (actual != expected) {
    throw std::invalid_argument(std::string(what) + ": expected " + std::to_string(expected) +
                                " points, got " + std::to_string(actual));
  }
}

void require_degree(int degree, const char* what) {
  if (degree < 0) throw std::invalid_argument(std::string(what) + ": negative degree");
}

}  // namespace

Point3& Point3::operator+=(const Point3& rhs) {
  x += rhs.x;
  y += rhs.y;
  z += rhs.z;
  return *this;
}

Point3& Point3::operator-=(const Point3& rhs) {
  x -= rhs.x;
  y -= rhs.y;
  z -= rhs.z;
  return *this;
}

Point3& Point3::operator*=(const Rational& scale) {
  x *= scale;
  y *= scale;
  z *= scale;
  return *this;
}

Point3 lerp(const Point3& p, const Point3& q, const Rational& t) {
  return p + (q - p) * t;
}

bool is_degenerate(const DomainTriangle& tri) {
  const Rational cross = (tri.b.s - tri.a.s) * (tri.c.t - tri.a.t) -
                         (tri.b.t - tri.a.t) * (tri.c.s - tri.a.s);
  return cross.is_zero();
}

MonomialCurve::MonomialCurve(std::vector<Point3> coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) throw std::invalid_argument("MonomialCurve: no coefficients");
}

MonomialSurface::MonomialSurface(int n, int m, std::vector<Point3> coeffs)
    : n_(n), m_(m), coeffs_(std::move(coeffs)) {
  require_degree(n, "MonomialSurface");
  require_degree(m, "MonomialSurface");
  require_size(coeffs_.size(), static_cast<std::size_t>((n + 1) * (m + 1)), "MonomialSurface");
}

const Point3& MonomialSurface::coeff(int i, int j) const {
  if (i < 0 || i > n_ || j < 0 || j > m_) throw std::out_of_range("MonomialSurface::coeff");
  return coeffs_[static_cast<std::size_t>(i * (m_ + 1) + j)];
}

BezierCurve::BezierCurve(std::vector<Point3> control_points, ParamInterval domain)
    : points_(std::move(control_points)), domain_(std::move(domain)) {
  if (points_.empty()) throw std::invalid_argument("BezierCurve: no control points");
}

TensorPatch::TensorPatch(int n, int m, std::vector<Point3> control_points, ParamRect domain)
    : n_(n), m_(m), points_(std::move(control_points)), domain_(std::move(domain)) {
  require_degree(n, "TensorPatch");
  require_degree(m, "TensorPatch");
  require_size(points_.size(), static_cast<std::size_t>((n + 1) * (m + 1)), "TensorPatch");
}

const Point3& TensorPatch::at(int nu, int mu) const {
  if (nu < 0 || nu > n_ || mu < 0 || mu > m_) throw std::out_of_range("TensorPatch::at");
  return points_[static_cast<std::size_t>(nu * (m_ + 1) + mu)];
}

TrianglePatch::TrianglePatch(int total_degree, std::vector<Point3> control_points,
                             DomainTriangle domain)
    : degree_(total_degree), points_(std::move(control_points)), domain_(std::move(domain)) {
  require_degree(total_degree, "TrianglePatch");
  require_size(points_.size(), point_count(total_degree), "TrianglePatch");
}

std::size_t TrianglePatch::point_count(int total_degree) {
  const auto n = static_cast<std::size_t>(total_degree);
  return (n + 1) * (n + 2) / 2;
}

std::size_t TrianglePatch::index(int total_degree, int nu, int mu) {
  if (nu < 0 || mu < 0 || nu + mu > total_degree) {
    throw std::out_of_range("TrianglePatch index (" + std::to_string(nu) + ", " +
                            std::to_string(mu) + ") outside degree " +
                            std::to_string(total_degree));
  }
  // Rows nu' < nu hold N - nu' + 1 points each.
  const int before = nu * (total_degree + 1) - nu * (nu - 1) / 2;
  return static_cast<std::size_t>(before + mu);
}

}  // namespace blossom
