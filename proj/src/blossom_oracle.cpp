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

#include <numeric>
#include <stdexcept>
#include <string>

#include "blossom/combinatorics.hpp"

namespace blossom::oracle {
namespace {

/// Calls visit(chosen) for every k-element subset of `pool`, in lexicographic
/// order of positions. `chosen` holds the selected pool elements.
template <typename Visit>
void for_each_subset(std::span<const int> pool, int k, Visit&& visit) {
  const int size = static_cast<int>(pool.size());
  if (k < 0 || k > size) return;
  std::vector<int> pos(static_cast<std::size_t>(k));
  std::iota(pos.begin(), pos.end(), 0);
  std::vector<int> chosen(static_cast<std::size_t>(k));
  while (true) {
    for (int t = 0; t < k; ++t) chosen[t] = pool[pos[t]];
    visit(std::span<const int>(chosen));
    int t = k - 1;
    while (t >= 0 && pos[t] == size - k + t) --t;
    if (t < 0) return;
    ++pos[t];
    for (int s = t + 1; s < k; ++s) pos[s] = pos[s - 1] + 1;
  }
}

std::vector<int> all_slots(std::size_t count) {
  std::vector<int> slots(count);
  std::iota(slots.begin(), slots.end(), 0);
  return slots;
}

/// Unnormalized elementary symmetric sum e_i(args), by enumeration.
Rational subset_product_sum(int i, std::span<const Rational> args, TermCounter* counter) {
  const auto slots = all_slots(args.size());
  Rational sum;
  for_each_subset(slots, i, [&](std::span<const int> chosen) {
    Rational product(1);
    for (int slot : chosen) product *= args[static_cast<std::size_t>(slot)];
    sum += product;
    count_term(counter);
  });
  return sum;
}

void require_index(int i, int max, const char* what) {
  if (i < 0 || i > max) {
    throw std::invalid_argument(std::string(what) + ": index " + std::to_string(i) +
                                " outside [0, " + std::to_string(max) + "]");
  }
}

void require_length(std::size_t actual, int expected, const char* what) {
  if (actual != static_cast<std::size_t>(expected)) {
    throw std::invalid_argument(std::string(what) + ": expected " + std::to_string(expected) +
                                " arguments, got " + std::to_string(actual));
  }
}

std::vector<Rational> repeated(const Rational& first, int first_count, const Rational& second,
                               int second_count) {
  std::vector<Rational> out(static_cast<std::size_t>(first_count), first);
  out.insert(out.end(), static_cast<std::size_t>(second_count), second);
  return out;
}

}  // namespace

Rational monomial_blossom_curve(int i, std::span<const Rational> args, TermCounter* counter) {
  const int n = static_cast<int>(args.size());
  require_index(i, n, "monomial_blossom_curve");
  return subset_product_sum(i, args, counter) / Rational(binomial(n, i));
}

Point3 blossom_curve(const MonomialCurve& curve, std::span<const Rational> args,
                     TermCounter* counter) {
  require_length(args.size(), curve.degree(), "blossom_curve");
  Point3 value;
  for (int i = 0; i <= curve.degree(); ++i) {
    value += curve.coeff(i) * monomial_blossom_curve(i, args, counter);
  }
  return value;
}

Rational monomial_blossom_tensor(int i, int j, const TensorBlossomArgs& args,
                                 TermCounter* counter) {
  return monomial_blossom_curve(i, args.u, counter) * monomial_blossom_curve(j, args.v, counter);
}

Rational monomial_blossom_tensor_enumerated(int i, int j, const TensorBlossomArgs& args,
                                            TermCounter* counter) {
  const int n = static_cast<int>(args.u.size());
  const int m = static_cast<int>(args.v.size());
  require_index(i, n, "monomial_blossom_tensor_enumerated");
  require_index(j, m, "monomial_blossom_tensor_enumerated");
  const auto u_slots = all_slots(args.u.size());
  const auto v_slots = all_slots(args.v.size());
  Rational sum;
  for_each_subset(u_slots, i, [&](std::span<const int> alpha) {
    Rational u_product(1);
    for (int slot : alpha) u_product *= args.u[static_cast<std::size_t>(slot)];
    for_each_subset(v_slots, j, [&](std::span<const int> beta) {
      Rational product = u_product;
      for (int slot : beta) product *= args.v[static_cast<std::size_t>(slot)];
      sum += product;
      count_term(counter);
    });
  });
  return sum / Rational(Integer(binomial(n, i) * binomial(m, j)));
}

Point3 blossom_tensor(const MonomialSurface& surface, const TensorBlossomArgs& args,
                      TermCounter* counter) {
  require_length(args.u.size(), surface.degree_u(), "blossom_tensor (u)");
  require_length(args.v.size(), surface.degree_v(), "blossom_tensor (v)");
  Point3 value;
  for (int i = 0; i <= surface.degree_u(); ++i) {
    for (int j = 0; j <= surface.degree_v(); ++j) {
      value += surface.coeff(i, j) * monomial_blossom_tensor(i, j, args, counter);
    }
  }
  return value;
}

Point3 blossom_tensor_enumerated(const MonomialSurface& surface, const TensorBlossomArgs& args,
                                 TermCounter* counter) {
  require_length(args.u.size(), surface.degree_u(), "blossom_tensor_enumerated (u)");
  require_length(args.v.size(), surface.degree_v(), "blossom_tensor_enumerated (v)");
  Point3 value;
  for (int i = 0; i <= surface.degree_u(); ++i) {
    for (int j = 0; j <= surface.degree_v(); ++j) {
      value += surface.coeff(i, j) * monomial_blossom_tensor_enumerated(i, j, args, counter);
    }
  }
  return value;
}

Rational monomial_blossom_triangle(int i, int j, std::span<const Point2> args,
                                   TermCounter* counter) {
  const int total = static_cast<int>(args.size());
  if (i < 0 || j < 0 || i + j > total) {
    throw std::invalid_argument("monomial_blossom_triangle: invalid (i, j) = (" +
                                std::to_string(i) + ", " + std::to_string(j) +
                                ") for N = " + std::to_string(total));
  }
  const auto slots = all_slots(args.size());
  Rational sum;
  for_each_subset(slots, i, [&](std::span<const int> alpha) {
    Rational u_product(1);
    std::vector<int> rest;
    rest.reserve(slots.size() - alpha.size());
    std::size_t a = 0;
    for (int slot : slots) {
      if (a < alpha.size() && alpha[a] == slot) {
        u_product *= args[static_cast<std::size_t>(slot)].s;
        ++a;
      } else {
        rest.push_back(slot);
      }
    }
    for_each_subset(rest, j, [&](std::span<const int> beta) {
      Rational product = u_product;
      for (int slot : beta) product *= args[static_cast<std::size_t>(slot)].t;
      sum += product;
      count_term(counter);
    });
  });
  return sum / Rational(multinomial(total, i, j));
}

Point3 blossom_triangle(const MonomialSurface& surface, std::span<const Point2> args,
                        TermCounter* counter) {
  require_length(args.size(), surface.total_degree(), "blossom_triangle");
  Point3 value;
  for (int i = 0; i <= surface.degree_u(); ++i) {
    for (int j = 0; j <= surface.degree_v(); ++j) {
      value += surface.coeff(i, j) * monomial_blossom_triangle(i, j, args, counter);
    }
  }
  return value;
}

BezierCurve subdivide_curve(const MonomialCurve& curve, const ParamInterval& interval,
                            TermCounter* counter) {
  const int n = curve.degree();
  std::vector<Point3> points;
  points.reserve(static_cast<std::size_t>(n + 1));
  for (int nu = 0; nu <= n; ++nu) {
    const auto args = repeated(interval.b, nu, interval.a, n - nu);
    points.push_back(blossom_curve(curve, args, counter));
  }
  return BezierCurve(std::move(points), interval);
}

TensorPatch subdivide_tensor(const MonomialSurface& surface, const ParamRect& rect,
                             TensorForm form, TermCounter* counter) {
  const int n = surface.degree_u();
  const int m = surface.degree_v();
  std::vector<Point3> points;
  points.reserve(static_cast<std::size_t>((n + 1) * (m + 1)));
  for (int nu = 0; nu <= n; ++nu) {
    for (int mu = 0; mu <= m; ++mu) {
      const TensorBlossomArgs args{repeated(rect.u.b, nu, rect.u.a, n - nu),
                                   repeated(rect.v.b, mu, rect.v.a, m - mu)};
      points.push_back(form == TensorForm::kProduct
                           ? blossom_tensor(surface, args, counter)
                           : blossom_tensor_enumerated(surface, args, counter));
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
      std::vector<Point2> args(static_cast<std::size_t>(nu), tri.a);
      args.insert(args.end(), static_cast<std::size_t>(mu), tri.b);
      args.insert(args.end(), static_cast<std::size_t>(total - nu - mu), tri.c);
      points.push_back(blossom_triangle(surface, args, counter));
    }
  }
  return TrianglePatch(total, std::move(points), tri);
}

}  // namespace blossom::oracle
