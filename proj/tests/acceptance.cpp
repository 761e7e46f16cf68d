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

// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any failure.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "blossom/bench.hpp"
#include "blossom/blossom_oracle.hpp"
#include "blossom/evaluation.hpp"
#include "blossom/random_instances.hpp"
#include "blossom/subdivision.hpp"
#include "cli.hpp"
#include "test_support.hpp"

namespace blossom {
namespace {

using testing::pt;
using testing::q;

struct Outcome {
  bool passed = true;
  std::string detail;

  void require(bool condition, const std::string& what) {
    if (!condition && passed) detail = what;
    passed = passed && condition;
  }
};

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

template <typename Patch>
void require_same_points(Outcome& out, const Patch& got, const Patch& golden, const char* name) {
  out.require(got.control_points().size() == golden.control_points().size(),
              std::string(name) + ": wrong point count");
  out.require(std::equal(got.control_points().begin(), got.control_points().end(),
                         golden.control_points().begin(), golden.control_points().end()),
              std::string(name) + ": control points differ from golden block");
}

Outcome tensor_unit_square() {
  Outcome out;
  const auto start = std::chrono::steady_clock::now();
  const auto patch = subdivide_tensor(testing::example_surface(), {{0, 1}, {0, 1}});
  const double elapsed = seconds_since(start);
  const auto golden = std::get<TensorPatch>(testing::load_fixture("tpb_unit_square.json"));
  require_same_points(out, patch, golden, "unit square");
  out.require(patch.control_points().size() == 12, "unit square: expected 12 points");
  out.require(elapsed < 1.0, "unit square: took longer than 1 s");
  char buffer[64];
  std::snprintf(buffer, sizeof buffer, "12/12 exact, %.4f s", elapsed);
  if (out.passed) out.detail = buffer;
  return out;
}

Outcome tensor_sub_rectangle() {
  Outcome out;
  const auto patch =
      subdivide_tensor(testing::example_surface(), {{q(1, 3), q(2, 3)}, {q(1, 4), q(3, 4)}});
  const auto golden = std::get<TensorPatch>(testing::load_fixture("tpb_sub_rect.json"));
  require_same_points(out, patch, golden, "sub-rectangle");
  out.require(patch.at(0, 0) == pt(q(28, 27), q(983, 2160), q(3637, 8640)), "sub-rectangle: p00 wrong");
  if (out.passed) out.detail = "12/12 exact, p00 = (28/27, 983/2160, 3637/8640)";
  return out;
}

void check_triangle(Outcome& out, const DomainTriangle& tri, const char* reference_name,
                    const char* label) {
  const auto surface = testing::example_surface();
  const auto patch = subdivide_triangle(surface, tri);
  const auto reference = std::get<TrianglePatch>(testing::load_fixture(reference_name));
  out.require(testing::sorted_keys(patch.control_points()) ==
                  testing::sorted_keys(reference.control_points()),
              std::string(label) + ": multiset of 21 points differs");
  const int total = patch.degree();
  out.require(patch.at(total, 0) == eval_monomial_surface(surface, tri.a.s, tri.a.t),
              std::string(label) + ": vertex point for a");
  out.require(patch.at(0, total) == eval_monomial_surface(surface, tri.b.s, tri.b.t),
              std::string(label) + ": vertex point for b");
  out.require(patch.at(0, 0) == eval_monomial_surface(surface, tri.c.s, tri.c.t),
              std::string(label) + ": vertex point for c");
}

Outcome triangle_tables() {
  Outcome out;
  const DomainTriangle unit{{0, 0}, {1, 0}, {0, 1}};
  check_triangle(out, unit, "tb_unit_triangle_reference.json", "unit triangle");
  check_triangle(out, {{0, q(1, 2)}, {q(1, 2), 0}, {q(1, 2), q(1, 2)}},
                 "tb_half_triangle_reference.json", "half triangle");
  const auto s3 = subdivide_triangle(testing::example_surface(), unit);
  out.require(s3.at(0, 5) == pt(4, 0, q(1, 5)) && s3.at(0, 0) == pt(0, 2, q(-4, 5)) &&
                  s3.at(5, 0) == pt(0, 0, 0),
              "unit triangle: vertex values");
  if (out.passed) out.detail = "both triangles: 21/21 points as multisets, vertex points exact";
  return out;
}

Outcome oracle_equivalence() {
  Outcome out;
  std::istringstream in;
  std::ostringstream stdout_text;
  std::ostringstream stderr_text;
  const auto start = std::chrono::steady_clock::now();
  const int code = cli::run({"verify", "--trials", "100", "--max-degree", "3", "--seed", "42"},
                            {in, stdout_text, stderr_text});
  const double elapsed = seconds_since(start);
  out.require(code == cli::kExitOk, "verify exited " + std::to_string(code) + ": " + stderr_text.str());
  out.require(elapsed < 60.0, "verify took longer than 60 s");
  if (out.passed) {
    std::string summary = stdout_text.str();
    std::replace(summary.begin(), summary.end(), '\n', ';');
    char buffer[64];
    std::snprintf(buffer, sizeof buffer, " %.2f s", elapsed);
    out.detail = summary + buffer;
  }
  return out;
}

std::vector<Rational> random_values(InstanceGenerator& gen, int count) {
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
void rotate_and_swap(std::vector<T>& values) {
  if (values.size() < 2) return;
  std::rotate(values.begin(), values.begin() + 1, values.end());
  std::swap(values.front(), values.back());
}

Outcome blossom_axioms() {
  constexpr int kInstances = 50;
  Outcome out;
  InstanceGenerator gen(5);
  int checks = 0;
  for (int trial = 0; trial < kInstances; ++trial) {
    const int n = gen.integer(1, 4);
    const int m = gen.integer(1, 4);
    const auto curve = gen.curve(n);
    const auto surface = gen.surface(n, m);
    const Rational alpha = gen.rational();
    const Rational beta = Rational(1) - alpha;

    // symmetry
    auto args = random_values(gen, n);
    const auto curve_value = oracle::blossom_curve(curve, args);
    rotate_and_swap(args);
    out.require(oracle::blossom_curve(curve, args) == curve_value, "curve symmetry");
    oracle::TensorBlossomArgs targs{random_values(gen, n), random_values(gen, m)};
    const auto tensor_value = oracle::blossom_tensor_enumerated(surface, targs);
    rotate_and_swap(targs.u);
    rotate_and_swap(targs.v);
    out.require(oracle::blossom_tensor_enumerated(surface, targs) == tensor_value, "tpb symmetry");
    auto points = random_points(gen, n + m);
    const auto tri_value = oracle::blossom_triangle(surface, points);
    rotate_and_swap(points);
    out.require(oracle::blossom_triangle(surface, points) == tri_value, "tb symmetry");

    // multi-affinity in a random slot
    const Rational lo = gen.rational();
    const Rational hi = gen.rational();
    const auto slot = static_cast<std::size_t>(gen.integer(0, n - 1));
    args[slot] = lo;
    const auto c_lo = oracle::blossom_curve(curve, args);
    args[slot] = hi;
    const auto c_hi = oracle::blossom_curve(curve, args);
    args[slot] = beta * lo + alpha * hi;
    out.require(oracle::blossom_curve(curve, args) == c_lo * beta + c_hi * alpha, "curve affinity");

    auto& side = gen.integer(0, 1) == 0 ? targs.u : targs.v;
    const auto tslot = static_cast<std::size_t>(gen.integer(0, static_cast<int>(side.size()) - 1));
    side[tslot] = lo;
    const auto t_lo = oracle::blossom_tensor_enumerated(surface, targs);
    side[tslot] = hi;
    const auto t_hi = oracle::blossom_tensor_enumerated(surface, targs);
    side[tslot] = beta * lo + alpha * hi;
    out.require(oracle::blossom_tensor_enumerated(surface, targs) == t_lo * beta + t_hi * alpha,
                "tpb affinity");

    const auto pslot = static_cast<std::size_t>(gen.integer(0, n + m - 1));
    const Point2 p_lo = gen.point2();
    const Point2 p_hi = gen.point2();
    points[pslot] = p_lo;
    const auto tri_lo = oracle::blossom_triangle(surface, points);
    points[pslot] = p_hi;
    const auto tri_hi = oracle::blossom_triangle(surface, points);
    points[pslot] = {beta * p_lo.s + alpha * p_hi.s, beta * p_lo.t + alpha * p_hi.t};
    out.require(oracle::blossom_triangle(surface, points) == tri_lo * beta + tri_hi * alpha,
                "tb affinity");

    // diagonal reduction
    const Rational u = gen.rational();
    const Rational v = gen.rational();
    const auto expected = eval_monomial_surface(surface, u, v);
    out.require(oracle::blossom_curve(curve, std::vector<Rational>(static_cast<std::size_t>(n), u)) ==
                    eval_monomial_curve(curve, u),
                "curve diagonal");
    out.require(oracle::blossom_tensor_enumerated(
                    surface, {std::vector<Rational>(static_cast<std::size_t>(n), u),
                              std::vector<Rational>(static_cast<std::size_t>(m), v)}) == expected,
                "tpb diagonal");
    out.require(oracle::blossom_triangle(
                    surface, std::vector<Point2>(static_cast<std::size_t>(n + m), {u, v})) == expected,
                "tb diagonal");
    checks += 9;
  }
  if (out.passed) {
    out.detail = std::to_string(kInstances) + " instances per property and blossom kind (" +
                 std::to_string(checks) + " checks)";
  }
  return out;
}

Outcome geometric_consistency() {
  Outcome out;
  InstanceGenerator gen(6);
  int samples = 0;
  for (int trial = 0; trial < 20; ++trial) {
    const auto s = gen.surface(gen.integer(0, 3), gen.integer(0, 3));
    const ParamRect r = gen.rect();
    const auto tensor = subdivide_tensor(s, r);
    for (int gu = 0; gu < 5; ++gu) {
      for (int gv = 0; gv < 5; ++gv) {
        const Rational uu = q(gu, 4);
        const Rational vv = q(gv, 4);
        const Point3 expected =
            eval_monomial_surface(s, r.u.a + (r.u.b - r.u.a) * uu, r.v.a + (r.v.b - r.v.a) * vv);
        out.require(de_casteljau_tensor(tensor, uu, vv) == expected, "tpb sample mismatch");
        ++samples;
      }
    }
    const DomainTriangle tri = gen.triangle();
    const auto triangle = subdivide_triangle(s, tri);
    for (int i = 0; i <= 4; ++i) {
      for (int j = 0; i + j <= 4; ++j) {
        const Point2 xy = barycentric_to_cartesian(tri, q(i, 4), q(j, 4));
        out.require(de_casteljau_triangle(triangle, q(i, 4), q(j, 4)) ==
                        eval_monomial_surface(s, xy.s, xy.t),
                    "tb sample mismatch");
        ++samples;
      }
    }
  }
  if (out.passed) out.detail = "20 surfaces, " + std::to_string(samples) + " exact samples (25 tpb + 15 tb each)";
  return out;
}

Outcome assignment_counts() {
  Outcome out;
  long tuples = 0;
  for (int total = 0; total <= 8; ++total) {
    for (int nu = 0; nu <= total; ++nu) {
      for (int mu = 0; nu + mu <= total; ++mu) {
        for (int i = 0; i <= total; ++i) {
          for (int j = 0; i + j <= total; ++j) {
            std::map<ZoneCounts, long> literal;
            if (total <= 5) literal = testing::enumerate_zone_splits(total, nu, mu, i, j);
            std::size_t visited = 0;
            TriangularLoopBounds(total, nu, mu, i, j).for_each([&](const ZoneCounts& z) {
              const Integer u_first = assignment_count_u_first(nu, mu, total, z);
              out.require(u_first == assignment_count_v_first(nu, mu, total, z),
                          "groupings disagree at N=" + std::to_string(total));
              if (total <= 5) {
                const auto it = literal.find(z);
                out.require(it != literal.end() && Integer(it->second) == u_first,
                            "literal enumeration disagrees at N=" + std::to_string(total));
              }
              ++visited;
              ++tuples;
            });
            if (total <= 5) out.require(visited == literal.size(), "tuple sets differ");
          }
        }
      }
    }
  }
  if (out.passed) {
    out.detail = std::to_string(tuples) + " tuples up to N = 8 agree; literal enumeration agrees up to N = 5";
  }
  return out;
}

Outcome loop_bounds() {
  Outcome out;
  long cases = 0;
  for (int total = 0; total <= 6; ++total) {
    for (int nu = 0; nu <= total; ++nu) {
      for (int mu = 0; nu + mu <= total; ++mu) {
        const int lambda = total - nu - mu;
        for (int i = 0; i <= total; ++i) {
          for (int j = 0; i + j <= total; ++j) {
            std::set<ZoneCounts> from_bounds;
            TriangularLoopBounds(total, nu, mu, i, j).for_each(
                [&](const ZoneCounts& z) { from_bounds.insert(z); });
            std::set<ZoneCounts> filtered;
            for (int ia = 0; ia <= nu; ++ia) {
              for (int ib = 0; ib <= mu; ++ib) {
                for (int ja = 0; ja <= nu; ++ja) {
                  for (int jb = 0; jb <= mu; ++jb) {
                    const int ig = i - ia - ib;
                    const int jg = j - ja - jb;
                    if (ig >= 0 && ig <= lambda && ia + ja <= nu && ib + jb <= mu && jg >= 0 &&
                        jg <= lambda - ig) {
                      filtered.insert({ia, ib, ig, ja, jb, jg});
                    }
                  }
                }
              }
            }
            out.require(from_bounds == filtered, "bounds differ at N=" + std::to_string(total));
            ++cases;
          }
        }
      }
    }
  }
  if (out.passed) out.detail = std::to_string(cases) + " (N, nu, mu, i, j) cases up to N = 6";
  return out;
}

std::uint64_t term_count(const std::vector<std::vector<std::string>>& rows, const std::string& shape,
                         int degree, const std::string& method) {
  for (const auto& row : rows) {
    if (row.size() == 8 && row[0] == shape && row[1] == std::to_string(degree) && row[3] == method) {
      return std::stoull(row[7]);
    }
  }
  return 0;
}

Outcome efficiency() {
  Outcome out;
  const auto records =
      run_bench({.shapes = {Shape::kCurve, Shape::kTensor, Shape::kTriangle}, .degrees = {4, 5}},
                [](const std::string&) {});
  const auto rows = testing::parse_csv(bench_csv(records));
  std::string ratios;
  for (const char* shape : {"curve", "tpb", "tb"}) {
    const auto closed4 = term_count(rows, shape, 4, "closed-form");
    const auto oracle4 = term_count(rows, shape, 4, "oracle");
    out.require(closed4 > 0 && closed4 < oracle4, std::string(shape) + ": not below oracle at degree 4");
    const auto closed5 = term_count(rows, shape, 5, "closed-form");
    const auto oracle5 = term_count(rows, shape, 5, "oracle");
    const double ratio = closed5 == 0 ? 0.0 : static_cast<double>(oracle5) / static_cast<double>(closed5);
    const bool surface = std::string(shape) != "curve";
    if (surface) out.require(ratio > 10.0, std::string(shape) + ": ratio at n = m = 5 not above 10");
    char buffer[96];
    std::snprintf(buffer, sizeof buffer, "%s%s %.1fx%s", ratios.empty() ? "" : ", ", shape, ratio,
                  surface ? "" : " (curve, reported only)");
    ratios += buffer;
  }
  const std::string summary = "degree-5 oracle/closed-form term ratios: " + ratios;
  out.detail = out.passed ? summary : out.detail + "; " + summary;
  return out;
}

}  // namespace
}  // namespace blossom

int main() {
  using blossom::Outcome;
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria = {
      {"tensor patch over the unit square matches the reference block", blossom::tensor_unit_square},
      {"tensor patch over [1/3,2/3]x[1/4,3/4] matches the reference block", blossom::tensor_sub_rectangle},
      {"triangular patches match the reference blocks", blossom::triangle_tables},
      {"verify --trials 100 --max-degree 3 --seed 42", blossom::oracle_equivalence},
      {"blossom axioms", blossom::blossom_axioms},
      {"geometric consistency", blossom::geometric_consistency},
      {"assignment counts", blossom::assignment_counts},
      {"triangular loop bounds", blossom::loop_bounds},
      {"efficiency signal", blossom::efficiency},
  };
  int failures = 0;
  int number = 0;
  for (const auto& [name, check] : criteria) {
    ++number;
    Outcome outcome;
    try {
      outcome = check();
    } catch (const std::exception& e) {
      outcome = {false, std::string("exception: ") + e.what()};
    }
    if (!outcome.passed) ++failures;
    std::printf("[%s] %d. %s: %s\n", outcome.passed ? "PASS" : "FAIL", number, name,
                outcome.detail.c_str());
  }
  std::printf("%d/%d criteria passed\n", number - failures, number);
  return failures == 0 ? 0 : 1;
}
