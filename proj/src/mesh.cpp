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

#include "blossom/mesh.hpp"

#include <cstdio>
#include <sstream>
#include <stdexcept>
#include <vector>

#include "blossom/evaluation.hpp"

namespace blossom {
namespace {

class ObjWriter {
 public:
  /// Returns the 1-based OBJ index of the new vertex.
  int vertex(const Point3& p) {
    out_ << "v " << format_coordinate(p.x) << ' ' << format_coordinate(p.y) << ' '
         << format_coordinate(p.z) << '\n';
    return ++vertex_count_;
  }

  void face(std::initializer_list<int> indices) { element('f', indices); }
  void line(std::initializer_list<int> indices) { element('l', indices); }

  void polyline(const std::vector<int>& indices) {
    out_ << 'l';
    for (int idx : indices) out_ << ' ' << idx;
    out_ << '\n';
  }

  void comment(const std::string& text) { out_ << "# " << text << '\n'; }

  std::string str() const { return out_.str(); }

 private:
  void element(char tag, std::initializer_list<int> indices) {
    out_ << tag;
    for (int idx : indices) out_ << ' ' << idx;
    out_ << '\n';
  }

  std::ostringstream out_;
  int vertex_count_ = 0;
};

Rational grid_param(int k, int samples) { return Rational(k) / Rational(samples - 1); }

template <typename Eval>
void write_grid(ObjWriter& obj, int samples, Eval&& eval) {
  std::vector<int> ids;
  ids.reserve(static_cast<std::size_t>(samples * samples));
  for (int i = 0; i < samples; ++i) {
    for (int j = 0; j < samples; ++j) {
      ids.push_back(obj.vertex(eval(grid_param(i, samples), grid_param(j, samples))));
    }
  }
  auto id = [&](int i, int j) { return ids[static_cast<std::size_t>(i * samples + j)]; };
  for (int i = 0; i + 1 < samples; ++i) {
    for (int j = 0; j + 1 < samples; ++j) {
      obj.face({id(i, j), id(i + 1, j), id(i + 1, j + 1), id(i, j + 1)});
    }
  }
}

template <typename Eval>
void write_polyline(ObjWriter& obj, int samples, Eval&& eval) {
  std::vector<int> ids;
  for (int k = 0; k < samples; ++k) ids.push_back(obj.vertex(eval(grid_param(k, samples))));
  obj.polyline(ids);
}

void write_triangle_grid(ObjWriter& obj, int samples, const TrianglePatch& patch) {
  const int steps = samples - 1;
  std::vector<int> ids;
  ids.reserve(TrianglePatch::point_count(steps));
  for (int i = 0; i <= steps; ++i) {
    for (int j = 0; i + j <= steps; ++j) {
      ids.push_back(
          obj.vertex(de_casteljau_triangle(patch, grid_param(i, samples), grid_param(j, samples))));
    }
  }
  auto id = [&](int i, int j) { return ids[TrianglePatch::index(steps, i, j)]; };
  for (int i = 0; i < steps; ++i) {
    for (int j = 0; i + j < steps; ++j) {
      obj.face({id(i, j), id(i + 1, j), id(i, j + 1)});
      if (i + j + 1 < steps) obj.face({id(i + 1, j), id(i + 1, j + 1), id(i, j + 1)});
    }
  }
}

void write_net(ObjWriter& obj, const BezierCurve& bezier) {
  std::vector<int> ids;
  for (const auto& p : bezier.control_points()) ids.push_back(obj.vertex(p));
  obj.polyline(ids);
}

void write_net(ObjWriter& obj, const TensorPatch& patch) {
  const int n = patch.degree_u();
  const int m = patch.degree_v();
  std::vector<int> ids;
  for (const auto& p : patch.control_points()) ids.push_back(obj.vertex(p));
  auto id = [&](int nu, int mu) { return ids[static_cast<std::size_t>(nu * (m + 1) + mu)]; };
  for (int nu = 0; nu <= n; ++nu) {
    for (int mu = 0; mu <= m; ++mu) {
      if (mu < m) obj.line({id(nu, mu), id(nu, mu + 1)});
      if (nu < n) obj.line({id(nu, mu), id(nu + 1, mu)});
    }
  }
}

void write_net(ObjWriter& obj, const TrianglePatch& patch) {
  const int total = patch.degree();
  std::vector<int> ids;
  for (const auto& p : patch.control_points()) ids.push_back(obj.vertex(p));
  auto id = [&](int nu, int mu) { return ids[TrianglePatch::index(total, nu, mu)]; };
  for (int nu = 0; nu < total; ++nu) {
    for (int mu = 0; nu + mu < total; ++mu) {
      obj.line({id(nu, mu), id(nu + 1, mu)});
      obj.line({id(nu, mu), id(nu, mu + 1)});
      obj.line({id(nu + 1, mu), id(nu, mu + 1)});
    }
  }
}

}  // namespace

std::string format_coordinate(const Rational& value) {
  char buffer[64];
  std::snprintf(buffer, sizeof buffer, "%.17g", value.to_double());
  return buffer;
}

std::string mesh_obj(const Document& document, const MeshOptions& options) {
  const int samples = options.samples;
  if (samples < 2) throw std::invalid_argument("mesh: samples must be at least 2");
  ObjWriter obj;
  obj.comment(std::string(document_kind(document)) + ", " + std::to_string(samples) +
              " samples");
  std::visit(
      [&](const auto& doc) {
        using T = std::decay_t<decltype(doc)>;
        if constexpr (std::is_same_v<T, MonomialCurve>) {
          write_polyline(obj, samples, [&](const Rational& t) { return eval_monomial_curve(doc, t); });
        } else if constexpr (std::is_same_v<T, MonomialSurface>) {
          write_grid(obj, samples, [&](const Rational& u, const Rational& v) {
            return eval_monomial_surface(doc, u, v);
          });
        } else if constexpr (std::is_same_v<T, BezierCurve>) {
          write_polyline(obj, samples, [&](const Rational& t) { return de_casteljau_curve(doc, t); });
          if (options.with_net) write_net(obj, doc);
        } else if constexpr (std::is_same_v<T, TensorPatch>) {
          write_grid(obj, samples, [&](const Rational& u, const Rational& v) {
            return de_casteljau_tensor(doc, u, v);
          });
          if (options.with_net) write_net(obj, doc);
        } else {
          write_triangle_grid(obj, samples, doc);
          if (options.with_net) write_net(obj, doc);
        }
      },
      document);
  return obj.str();
}

}  // namespace blossom
