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

#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace blossom {

enum class Shape { kCurve, kTensor, kTriangle };
enum class Method { kClosedForm, kOracle };

std::string_view to_string(Shape shape);    // "curve", "tpb", "tb"
std::string_view to_string(Method method);  // "closed-form", "oracle"
/// Throws std::invalid_argument for an unknown name.
Shape parse_shape(std::string_view name);

struct BenchRecord {
  Shape shape = Shape::kCurve;
  int degree_n = 0;
  int degree_m = 0;  // unused for curves
  Method method = Method::kClosedForm;
  int repetition = 0;
  std::int64_t wall_time_ns = 0;
  std::size_t control_point_count = 0;
  std::uint64_t term_count = 0;
};

struct BenchOptions {
  std::vector<Shape> shapes;
  std::vector<int> degrees;  // d means n = d (curve) or n = m = d (surfaces)
  int repeat = 1;
  int oracle_degree_cap = 6;
  std::uint64_t seed = 1;
};

using WarningSink = std::function<void(const std::string&)>;

/// Subdivides one random instance per (shape, degree) with both methods,
/// `repeat` times each. The oracle uses literal subset enumeration for every
/// shape. Oracle runs above the degree cap are skipped with a warning.
/// Throws std::invalid_argument on empty shape/degree lists, repeat < 1 or a
/// negative degree; throws std::logic_error if the two methods disagree.
std::vector<BenchRecord> run_bench(const BenchOptions& options, const WarningSink& warn);

/// Quotes a field per RFC 4180 when it contains a comma, quote, CR or LF.
std::string csv_field(std::string_view text);

/// Header plus one CRLF-terminated row per record.
std::string bench_csv(std::span<const BenchRecord> records);

}  // namespace blossom
