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

#include "blossom/verify.hpp"

#include <stdexcept>

#include "blossom/blossom_oracle.hpp"
#include "blossom/random_instances.hpp"
#include "blossom/subdivision.hpp"

namespace blossom {
namespace {

Json point_json(const Point3& p) {
  return Json::array({p.x.to_string(), p.y.to_string(), p.z.to_string()});
}

/// Compares two control-point lists; on mismatch returns the offending slot.
std::optional<std::size_t> first_mismatch(std::span<const Point3> lhs, std::span<const Point3> rhs) {
  if (lhs.size() != rhs.size()) return 0;
  for (std::size_t k = 0; k < lhs.size(); ++k) {
    if (lhs[k] != rhs[k]) return k;
  }
  return std::nullopt;
}

Json counterexample(const char* shape, Json input, Json closed_form, std::size_t slot,
                    std::span<const Point3> lhs, std::span<const Point3> rhs) {
  return Json{{"shape", shape},
              {"input", std::move(input)},
              {"closed_form", std::move(closed_form)},
              {"slot", slot},
              {"closed_form_point", slot < lhs.size() ? point_json(lhs[slot]) : Json()},
              {"oracle_point", slot < rhs.size() ? point_json(rhs[slot]) : Json()}};
}

}  // namespace

VerifyReport run_verification(const VerifyOptions& options) {
  if (options.trials < 1) throw std::invalid_argument("verify: trials must be at least 1");
  if (options.max_degree < 0) throw std::invalid_argument("verify: max-degree must be >= 0");

  InstanceGenerator gen(options.seed);
  VerifyReport report;
  report.tallies = {{"curve"}, {"tpb"}, {"tb"}};
  ShapeTally& curves = report.tallies[0];
  ShapeTally& tensors = report.tallies[1];
  ShapeTally& triangles = report.tallies[2];

  for (int trial = 0; trial < options.trials; ++trial) {
    const auto curve = gen.curve(gen.integer(0, options.max_degree));
    const auto interval = gen.interval();
    const auto bezier = subdivide_curve(curve, interval);
    const auto bezier_ref = oracle::subdivide_curve(curve, interval);
    if (auto slot = first_mismatch(bezier.control_points(), bezier_ref.control_points())) {
      report.counterexample = counterexample("curve", to_json(curve), to_json(bezier), *slot,
                                             bezier.control_points(), bezier_ref.control_points());
      return report;
    }
    ++curves.cases;
    curves.control_points += bezier.control_points().size();

    const auto tensor_surface = gen.surface(gen.integer(0, options.max_degree),
                                            gen.integer(0, options.max_degree));
    const auto rect = gen.rect();
    const auto tensor = subdivide_tensor(tensor_surface, rect);
    const auto tensor_ref =
        oracle::subdivide_tensor(tensor_surface, rect, oracle::TensorForm::kEnumerated);
    if (auto slot = first_mismatch(tensor.control_points(), tensor_ref.control_points())) {
      report.counterexample =
          counterexample("tpb", to_json(tensor_surface), to_json(tensor), *slot,
                         tensor.control_points(), tensor_ref.control_points());
      return report;
    }
    ++tensors.cases;
    tensors.control_points += tensor.control_points().size();

    const auto tri_surface = gen.surface(gen.integer(0, options.max_degree),
                                         gen.integer(0, options.max_degree));
    const auto tri = gen.triangle();
    const auto patch = subdivide_triangle(tri_surface, tri);
    const auto patch_ref = oracle::subdivide_triangle(tri_surface, tri);
    if (auto slot = first_mismatch(patch.control_points(), patch_ref.control_points())) {
      report.counterexample = counterexample("tb", to_json(tri_surface), to_json(patch), *slot,
                                             patch.control_points(), patch_ref.control_points());
      return report;
    }
    ++triangles.cases;
    triangles.control_points += patch.control_points().size();
  }
  return report;
}

}  // namespace blossom
