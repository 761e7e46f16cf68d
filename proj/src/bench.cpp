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

#include "blossom/bench.hpp"

#include <chrono>
#include <stdexcept>

#include "blossom/blossom_oracle.hpp"
#include "blossom/random_instances.hpp"
#include "blossom/subdivision.hpp"

namespace blossom {
namespace {

struct Run {
  std::vector<Point3> points;
  std::uint64_t terms = 0;
  std::int64_t nanos = 0;
};

template <typename Fn>
Run timed(Fn&& fn) {
  TermCounter counter;
  const auto start = std::chrono::steady_clock::now();
  auto points = fn(&counter);
  const auto stop = std::chrono::steady_clock::now();
  return {std::move(points), counter.terms,
          std::chrono::duration_cast<std::chrono::nanoseconds>(stop - start).count()};
}

template <typename Patch>
std::vector<Point3> points_of(const Patch& patch) {
  const auto span = patch.control_points();
  return {span.begin(), span.end()};
}

}  // namespace

std::string_view to_string(Shape shape) {
  switch (shape) {
    case Shape::kCurve:
      return "curve";
    case Shape::kTensor:
      return "tpb";
    case Shape::kTriangle:
      return "tb";
  }
  return "?";
}

std::string_view to_string(Method method) {
  return method == Method::kClosedForm ? "closed-form" : "oracle";
}

Shape parse_shape(std::string_view name) {
  if (name == "curve") return Shape::kCurve;
  if (name == "tpb") return Shape::kTensor;
  if (name == "tb") return Shape::kTriangle;
  throw std::invalid_argument("unknown shape '" + std::string(name) + "'");
}

std::vector<BenchRecord> run_bench(const BenchOptions& options, const WarningSink& warn) {
  if (options.shapes.empty()) throw std::invalid_argument("bench: no shapes given");
  if (options.degrees.empty()) throw std::invalid_argument("bench: no degrees given");
  if (options.repeat < 1) throw std::invalid_argument("bench: repeat must be at least 1");

  InstanceGenerator gen(options.seed);
  std::vector<BenchRecord> records;
  for (Shape shape : options.shapes) {
    for (int degree : options.degrees) {
      if (degree < 0) throw std::invalid_argument("bench: negative degree");
      const int m = shape == Shape::kCurve ? 0 : degree;

      std::function<Run()> closed_form;
      std::function<Run()> oracle;
      switch (shape) {
        case Shape::kCurve: {
          auto curve = gen.curve(degree);
          auto interval = gen.interval();
          closed_form = [=] {
            return timed([&](TermCounter* c) { return points_of(subdivide_curve(curve, interval, c)); });
          };
          oracle = [=] {
            return timed(
                [&](TermCounter* c) { return points_of(oracle::subdivide_curve(curve, interval, c)); });
          };
          break;
        }
        case Shape::kTensor: {
          auto surface = gen.surface(degree, degree);
          auto rect = gen.rect();
          closed_form = [=] {
            return timed([&](TermCounter* c) { return points_of(subdivide_tensor(surface, rect, c)); });
          };
          oracle = [=] {
            return timed([&](TermCounter* c) {
              return points_of(
                  oracle::subdivide_tensor(surface, rect, oracle::TensorForm::kEnumerated, c));
            });
          };
          break;
        }
        case Shape::kTriangle: {
          auto surface = gen.surface(degree, degree);
          auto tri = gen.triangle();
          closed_form = [=] {
            return timed([&](TermCounter* c) { return points_of(subdivide_triangle(surface, tri, c)); });
          };
          oracle = [=] {
            return timed(
                [&](TermCounter* c) { return points_of(oracle::subdivide_triangle(surface, tri, c)); });
          };
          break;
        }
      }

      const bool run_oracle = degree <= options.oracle_degree_cap;
      if (!run_oracle) {
        warn("skipping oracle for " + std::string(to_string(shape)) + " at degree " +
             std::to_string(degree) + " (cap " + std::to_string(options.oracle_degree_cap) + ")");
      }
      for (int rep = 0; rep < options.repeat; ++rep) {
        const Run fast = closed_form();
        records.push_back({shape, degree, m, Method::kClosedForm, rep, fast.nanos,
                           fast.points.size(), fast.terms});
        if (!run_oracle) continue;
        const Run slow = oracle();
        if (slow.points != fast.points) {
          throw std::logic_error("bench: closed form and oracle disagree for " +
                                 std::string(to_string(shape)) + " degree " +
                                 std::to_string(degree));
        }
        records.push_back({shape, degree, m, Method::kOracle, rep, slow.nanos,
                           slow.points.size(), slow.terms});
      }
    }
  }
  return records;
}

std::string csv_field(std::string_view text) {
  if (text.find_first_of(",\"\r\n") == std::string_view::npos) return std::string(text);
  std::string out = "\"";
  for (char ch : text) {
    if (ch == '"') out += '"';
    out += ch;
  }
  out += '"';
  return out;
}

std::string bench_csv(std::span<const BenchRecord> records) {
  std::string out =
      "shape,degree_n,degree_m,method,repetition,wall_time_ns,control_point_count,term_count\r\n";
  for (const auto& r : records) {
    const std::string fields[] = {
        std::string(to_string(r.shape)),
        std::to_string(r.degree_n),
        r.shape == Shape::kCurve ? std::string() : std::to_string(r.degree_m),
        std::string(to_string(r.method)),
        std::to_string(r.repetition),
        std::to_string(r.wall_time_ns),
        std::to_string(r.control_point_count),
        std::to_string(r.term_count)};
    for (std::size_t k = 0; k < std::size(fields); ++k) {
      if (k != 0) out += ',';
      out += csv_field(fields[k]);
    }
    out += "\r\n";
  }
  return out;
}

}  // namespace blossom
