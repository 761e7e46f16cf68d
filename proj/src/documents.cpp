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

#include "blossom/documents.hpp"

#include <vector>

namespace blossom {
namespace {

Json rational_json(const Rational& value) { return value.to_string(); }

Json point_json(const Point3& p) {
  return Json::array({rational_json(p.x), rational_json(p.y), rational_json(p.z)});
}

Json pair_json(const Rational& first, const Rational& second) {
  return Json::array({rational_json(first), rational_json(second)});
}

Json points_json(std::span<const Point3> points) {
  Json out = Json::array();
  for (const auto& p : points) out.push_back(point_json(p));
  return out;
}

Json grid_json(std::span<const Point3> points, int rows, int cols) {
  Json out = Json::array();
  for (int r = 0; r < rows; ++r) {
    out.push_back(points_json(points.subspan(static_cast<std::size_t>(r * cols),
                                             static_cast<std::size_t>(cols))));
  }
  return out;
}

[[noreturn]] void fail(const std::string& message) { throw DocumentError(message); }

const Json& field(const Json& object, const char* name) {
  if (!object.is_object() || !object.contains(name)) {
    fail(std::string("missing field '") + name + "'");
  }
  return object.at(name);
}

Rational rational_from(const Json& value) {
  if (!value.is_string()) fail("expected a rational string, got " + value.dump());
  try {
    return Rational::parse(value.get<std::string>());
  } catch (const std::invalid_argument& e) {
    fail(e.what());
  }
}

Point3 point_from(const Json& value) {
  if (!value.is_array() || value.size() != 3) fail("expected a 3-element point, got " + value.dump());
  return {rational_from(value[0]), rational_from(value[1]), rational_from(value[2])};
}

Point2 point2_from(const Json& value) {
  if (!value.is_array() || value.size() != 2) fail("expected a 2-element pair, got " + value.dump());
  return {rational_from(value[0]), rational_from(value[1])};
}

ParamInterval interval_from(const Json& value) {
  const Point2 pair = point2_from(value);
  return {pair.s, pair.t};
}

std::vector<int> degrees_from(const Json& doc, std::size_t expected) {
  const Json& degree = field(doc, "degree");
  if (!degree.is_array() || degree.size() != expected) {
    fail("'degree' must be an array of " + std::to_string(expected) + " integers");
  }
  std::vector<int> out;
  for (const auto& d : degree) {
    if (!d.is_number_integer() || d.get<long long>() < 0 || d.get<long long>() > 1000) {
      fail("invalid degree entry " + d.dump());
    }
    out.push_back(d.get<int>());
  }
  return out;
}

std::vector<Point3> point_list_from(const Json& list, int count, const char* what) {
  if (!list.is_array() || list.size() != static_cast<std::size_t>(count)) {
    fail(std::string(what) + ": expected " + std::to_string(count) + " points");
  }
  std::vector<Point3> out;
  out.reserve(list.size());
  for (const auto& p : list) out.push_back(point_from(p));
  return out;
}

std::vector<Point3> grid_from(const Json& grid, int rows, int cols, const char* what) {
  if (!grid.is_array() || grid.size() != static_cast<std::size_t>(rows)) {
    fail(std::string(what) + ": expected " + std::to_string(rows) + " rows");
  }
  std::vector<Point3> out;
  for (const auto& row : grid) {
    auto part = point_list_from(row, cols, what);
    out.insert(out.end(), part.begin(), part.end());
  }
  return out;
}

TrianglePatch triangle_patch_from(const Json& doc) {
  const int total = degrees_from(doc, 1)[0];
  const Json& domain = field(field(doc, "domain"), "triangle");
  if (!domain.is_array() || domain.size() != 3) fail("'triangle' must list 3 vertices");
  const DomainTriangle tri{point2_from(domain[0]), point2_from(domain[1]), point2_from(domain[2])};

  const Json& list = field(doc, "control_points");
  const auto count = TrianglePatch::point_count(total);
  if (!list.is_array() || list.size() != count) {
    fail("tb-patch: expected " + std::to_string(count) + " control points");
  }
  std::vector<Point3> points(count);
  std::vector<bool> seen(count, false);
  for (const auto& entry : list) {
    const Json& index = field(entry, "index");
    if (!index.is_array() || index.size() != 2 || !index[0].is_number_integer() ||
        !index[1].is_number_integer()) {
      fail("tb-patch: bad index " + index.dump());
    }
    std::size_t slot = 0;
    try {
      slot = TrianglePatch::index(total, index[0].get<int>(), index[1].get<int>());
    } catch (const std::out_of_range& e) {
      fail(e.what());
    }
    if (seen[slot]) fail("tb-patch: duplicate index " + index.dump());
    seen[slot] = true;
    points[slot] = point_from(field(entry, "point"));
  }
  return TrianglePatch(total, std::move(points), tri);
}

}  // namespace

Json to_json(const MonomialCurve& curve) {
  return Json{{"kind", "curve"},
              {"degree", Json::array({curve.degree()})},
              {"coeffs", points_json(curve.coeffs())}};
}

Json to_json(const MonomialSurface& surface) {
  return Json{{"kind", "surface"},
              {"degree", Json::array({surface.degree_u(), surface.degree_v()})},
              {"coeffs", grid_json(surface.coeffs(), surface.degree_u() + 1,
                                   surface.degree_v() + 1)}};
}

Json to_json(const BezierCurve& bezier) {
  return Json{{"kind", "bezier-curve"},
              {"degree", Json::array({bezier.degree()})},
              {"domain", {{"interval", pair_json(bezier.domain().a, bezier.domain().b)}}},
              {"control_points", points_json(bezier.control_points())}};
}

Json to_json(const TensorPatch& patch) {
  const auto& rect = patch.domain();
  return Json{{"kind", "tpb-patch"},
              {"degree", Json::array({patch.degree_u(), patch.degree_v()})},
              {"domain", {{"u", pair_json(rect.u.a, rect.u.b)}, {"v", pair_json(rect.v.a, rect.v.b)}}},
              {"control_points", grid_json(patch.control_points(), patch.degree_u() + 1,
                                           patch.degree_v() + 1)}};
}

Json to_json(const TrianglePatch& patch) {
  const auto& tri = patch.domain();
  Json points = Json::array();
  for (int nu = 0; nu <= patch.degree(); ++nu) {
    for (int mu = 0; nu + mu <= patch.degree(); ++mu) {
      points.push_back({{"index", Json::array({nu, mu})}, {"point", point_json(patch.at(nu, mu))}});
    }
  }
  return Json{{"kind", "tb-patch"},
              {"degree", Json::array({patch.degree()})},
              {"domain", {{"triangle", Json::array({pair_json(tri.a.s, tri.a.t),
                                                    pair_json(tri.b.s, tri.b.t),
                                                    pair_json(tri.c.s, tri.c.t)})}}},
              {"control_points", std::move(points)}};
}

Json to_json(const Document& document) {
  return std::visit([](const auto& value) { return to_json(value); }, document);
}

Document document_from_json(const Json& doc) {
  const Json& kind_field = field(doc, "kind");
  if (!kind_field.is_string()) fail("'kind' must be a string");
  const auto kind = kind_field.get<std::string>();
  try {
    if (kind == "curve") {
      const int n = degrees_from(doc, 1)[0];
      return MonomialCurve(point_list_from(field(doc, "coeffs"), n + 1, "curve coeffs"));
    }
    if (kind == "surface") {
      const auto deg = degrees_from(doc, 2);
      return MonomialSurface(deg[0], deg[1],
                             grid_from(field(doc, "coeffs"), deg[0] + 1, deg[1] + 1,
                                       "surface coeffs"));
    }
    if (kind == "bezier-curve") {
      const int n = degrees_from(doc, 1)[0];
      return BezierCurve(point_list_from(field(doc, "control_points"), n + 1, "control_points"),
                         interval_from(field(field(doc, "domain"), "interval")));
    }
    if (kind == "tpb-patch") {
      const auto deg = degrees_from(doc, 2);
      const Json& domain = field(doc, "domain");
      return TensorPatch(deg[0], deg[1],
                         grid_from(field(doc, "control_points"), deg[0] + 1, deg[1] + 1,
                                   "control_points"),
                         ParamRect{interval_from(field(domain, "u")),
                                   interval_from(field(domain, "v"))});
    }
    if (kind == "tb-patch") return triangle_patch_from(doc);
  } catch (const Json::exception& e) {
    fail(e.what());
  }
  fail("unknown document kind '" + kind + "'");
}

Document parse_document(std::string_view text) {
  Json json;
  try {
    json = Json::parse(text);
  } catch (const Json::parse_error& e) {
    fail(std::string("invalid JSON: ") + e.what());
  }
  return document_from_json(json);
}

std::string dump_document(const Json& json) { return json.dump(2) + "\n"; }

std::string_view document_kind(const Document& document) {
  static constexpr std::string_view kKinds[] = {"curve", "surface", "bezier-curve", "tpb-patch",
                                                "tb-patch"};
  return kKinds[document.index()];
}

Point2 parse_point2(std::string_view text) {
  const auto comma = text.find(',');
  if (comma == std::string_view::npos || text.find(',', comma + 1) != std::string_view::npos) {
    throw std::invalid_argument("expected 's,t', got '" + std::string(text) + "'");
  }
  return {Rational::parse(text.substr(0, comma)), Rational::parse(text.substr(comma + 1))};
}

}  // namespace blossom
