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

#include <string>

#include "blossom/documents.hpp"

namespace blossom {

struct MeshOptions {
  int samples = 17;       // grid points per parameter direction (or per triangle edge)
  bool with_net = false;  // append the control net as `l` elements
};

/// Tessellates a document into ASCII OBJ text.
///   tpb-patch / surface: samples x samples grid over the unit parameter square, quad faces
///   tb-patch: triangular barycentric grid with `samples` points per edge, triangle faces
///   bezier-curve / curve: `samples` points on [0, 1] joined by one polyline
/// Monomial inputs are sampled over [0, 1] (x [0, 1]) directly. Coordinates
/// are exact values rounded to the nearest double. Throws
/// std::invalid_argument when samples < 2.
std::string mesh_obj(const Document& document, const MeshOptions& options);

/// Nearest double, printed with 17 significant digits.
std::string format_coordinate(const Rational& value);

}  // namespace blossom
