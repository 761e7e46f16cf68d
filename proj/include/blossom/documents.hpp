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

// JSON documents for monomial inputs and Bezier outputs. Every scalar is a
// rational string ("p" or "p/q"), so values survive a round trip exactly.
//
//   {"kind": "curve",   "degree": [n],    "coeffs": [[x, y, z], ...]}
//   {"kind": "surface", "degree": [n, m], "coeffs": [[[x, y, z], ...], ...]}
//   {"kind": "bezier-curve", "degree": [n], "domain": {"interval": [a, b]},
//    "control_points": [[x, y, z], ...]}
//   {"kind": "tpb-patch", "degree": [n, m], "domain": {"u": [a, b], "v": [c, d]},
//    "control_points": [[[x, y, z], ...], ...]}
//   {"kind": "tb-patch", "degree": [N], "domain": {"triangle": [[s, t], [s, t], [s, t]]},
//    "control_points": [{"index": [nu, mu], "point": [x, y, z]}, ...]}

#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>

#include <json.hpp>

#include "blossom/geometry.hpp"

namespace blossom {

using Json = nlohmann::json;

class DocumentError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

using Document =
    std::variant<MonomialCurve, MonomialSurface, BezierCurve, TensorPatch, TrianglePatch>;

Json to_json(const MonomialCurve& curve);
Json to_json(const MonomialSurface& surface);
Json to_json(const BezierCurve& bezier);
Json to_json(const TensorPatch& patch);
Json to_json(const TrianglePatch& patch);
Json to_json(const Document& document);

/// Throws DocumentError on schema or shape violations and on malformed rationals.
Document document_from_json(const Json& json);

/// Parses JSON text, then the document. Throws DocumentError.
Document parse_document(std::string_view text);

/// Two-space indented JSON followed by a newline. Deterministic.
std::string dump_document(const Json& json);

std::string_view document_kind(const Document& document);

/// "s,t" with rational components.
Point2 parse_point2(std::string_view text);

}  // namespace blossom
