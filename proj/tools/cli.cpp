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

#include "cli.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include <CLI11.hpp>

#include "blossom/bench.hpp"
#include "blossom/documents.hpp"
#include "blossom/evaluation.hpp"
#include "blossom/mesh.hpp"
#include "blossom/subdivision.hpp"
#include "blossom/verify.hpp"

namespace blossom::cli {
namespace {

/// Bad input or usage; maps to exit code 2.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class Diagnostics {
 public:
  explicit Diagnostics(Streams io) : err_(io.err), color_(io.color) {}

  void warning(const std::string& message) { emit("warning", "\033[33m", message); }
  void error(const std::string& message) { emit("error", "\033[31m", message); }

 private:
  void emit(const char* label, const char* ansi, const std::string& message) {
    if (color_) {
      err_ << ansi << label << ":\033[0m " << message << '\n';
    } else {
      err_ << label << ": " << message << '\n';
    }
  }

  std::ostream& err_;
  bool color_;
};

std::string read_input(const std::string& path, std::istream& in) {
  if (path == "-") {
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
  }
  std::ifstream file(path, std::ios::binary);
  if (!file) throw UsageError("cannot open input '" + path + "'");
  return {std::istreambuf_iterator<char>(file), std::istreambuf_iterator<char>()};
}

void write_output(const std::string& path, const std::string& text, std::ostream& out) {
  if (path == "-") {
    out << text;
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) throw UsageError("cannot open output '" + path + "'");
  file << text;
  if (!file) throw UsageError("failed writing '" + path + "'");
}

Document load(const std::string& path, std::istream& in) {
  try {
    return parse_document(read_input(path, in));
  } catch (const DocumentError& e) {
    throw UsageError(path + ": " + e.what());
  }
}

template <typename T>
const T& expect_kind(const Document& doc, const char* kind) {
  if (const T* value = std::get_if<T>(&doc)) return *value;
  throw UsageError(std::string("expected a '") + kind + "' document, got '" +
                   std::string(document_kind(doc)) + "'");
}

Rational rational_arg(const std::string& text, const char* name) {
  try {
    return Rational::parse(text);
  } catch (const std::invalid_argument& e) {
    throw UsageError(std::string("--") + name + ": " + e.what());
  }
}

std::vector<std::string> split_list(const std::string& text) {
  std::vector<std::string> items;
  std::stringstream stream(text);
  std::string item;
  while (std::getline(stream, item, ',')) {
    if (!item.empty()) items.push_back(item);
  }
  return items;
}

std::string point_line(const Point3& p) {
  return Json::array({p.x.to_string(), p.y.to_string(), p.z.to_string()}).dump() + "\n";
}

struct IoPaths {
  std::string input = "-";
  std::string output = "-";
};

void add_io(CLI::App* cmd, IoPaths& paths) {
  cmd->add_option("-i,--input", paths.input, "Input JSON document ('-' for stdin)");
  cmd->add_option("-o,--output", paths.output, "Output file ('-' for stdout)");
}

}  // namespace

int run(const std::vector<std::string>& args, Streams io) {
  Diagnostics diag(io);
  CLI::App app{"Exact subdivision of polynomial Bezier curves and surfaces via blossoms",
               "blossom-subdiv"};
  app.require_subcommand(1);

  IoPaths curve_io;
  std::string a_text;
  std::string b_text;
  auto* curve_cmd = app.add_subcommand("subdivide-curve", "Bezier form of a curve over [a, b]");
  add_io(curve_cmd, curve_io);
  curve_cmd->add_option("--a", a_text, "Interval start")->required();
  curve_cmd->add_option("--b", b_text, "Interval end")->required();

  IoPaths tpb_io;
  std::string ta_text;
  std::string tb_text;
  std::string tc_text;
  std::string td_text;
  auto* tpb_cmd =
      app.add_subcommand("subdivide-tpb", "Tensor-product patch of a surface over [a, b] x [c, d]");
  add_io(tpb_cmd, tpb_io);
  tpb_cmd->add_option("--a", ta_text, "u start")->required();
  tpb_cmd->add_option("--b", tb_text, "u end")->required();
  tpb_cmd->add_option("--c", tc_text, "v start")->required();
  tpb_cmd->add_option("--d", td_text, "v end")->required();

  IoPaths tb_io;
  std::vector<std::string> vertex_texts;
  auto* tb_cmd = app.add_subcommand("subdivide-tb", "Triangular patch of a surface over triangle abc");
  add_io(tb_cmd, tb_io);
  tb_cmd->add_option("--vertices", vertex_texts, "Three vertices as s,t")->required();

  IoPaths eval_io;
  std::vector<std::string> at_texts;
  auto* eval_cmd = app.add_subcommand(
      "eval", "Evaluate a document at a parameter (u for curves, u v for surfaces and patches)");
  add_io(eval_cmd, eval_io);
  eval_cmd->add_option("--at", at_texts, "Parameter value(s)")->required();

  VerifyOptions verify_opts;
  auto* verify_cmd =
      app.add_subcommand("verify", "Compare closed-form control points with brute-force blossoms");
  verify_cmd->add_option("--trials", verify_opts.trials, "Random instances per shape");
  verify_cmd->add_option("--max-degree", verify_opts.max_degree, "Largest degree drawn");
  verify_cmd->add_option("--seed", verify_opts.seed, "Generator seed");

  IoPaths mesh_io;
  MeshOptions mesh_opts;
  std::string mesh_format = "obj";
  auto* mesh_cmd = app.add_subcommand("mesh", "Tessellate a patch or surface to OBJ");
  add_io(mesh_cmd, mesh_io);
  mesh_cmd->add_option("-G,--samples", mesh_opts.samples, "Samples per direction or edge");
  mesh_cmd->add_option("--format", mesh_format, "Mesh format (obj)");
  mesh_cmd->add_flag("--with-net", mesh_opts.with_net, "Emit the control net as line elements");

  std::string shapes_text;
  std::string degrees_text;
  std::string bench_output = "-";
  BenchOptions bench_opts;
  auto* bench_cmd = app.add_subcommand("bench", "Closed form vs enumeration timing and term counts");
  bench_cmd->add_option("--shapes", shapes_text, "Comma list of curve,tpb,tb")->required();
  bench_cmd->add_option("--degrees", degrees_text, "Comma list of degrees")->required();
  bench_cmd->add_option("--repeat", bench_opts.repeat, "Repetitions per configuration");
  bench_cmd->add_option("--oracle-cap", bench_opts.oracle_degree_cap, "Largest oracle degree");
  bench_cmd->add_option("--seed", bench_opts.seed, "Generator seed");
  bench_cmd->add_option("-o,--output", bench_output, "CSV output ('-' for stdout)");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    io.out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    io.out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    diag.error(e.what());
    return kExitUsage;
  }

  try {
    if (curve_cmd->parsed()) {
      const auto doc = load(curve_io.input, io.in);
      const auto& curve = expect_kind<MonomialCurve>(doc, "curve");
      const ParamInterval interval{rational_arg(a_text, "a"), rational_arg(b_text, "b")};
      write_output(curve_io.output, dump_document(to_json(subdivide_curve(curve, interval))), io.out);
    } else if (tpb_cmd->parsed()) {
      const auto doc = load(tpb_io.input, io.in);
      const auto& surface = expect_kind<MonomialSurface>(doc, "surface");
      const ParamRect rect{{rational_arg(ta_text, "a"), rational_arg(tb_text, "b")},
                           {rational_arg(tc_text, "c"), rational_arg(td_text, "d")}};
      write_output(tpb_io.output, dump_document(to_json(subdivide_tensor(surface, rect))), io.out);
    } else if (tb_cmd->parsed()) {
      if (vertex_texts.size() != 3) {
        throw UsageError("--vertices needs exactly 3 points, got " +
                         std::to_string(vertex_texts.size()));
      }
      std::vector<Point2> vertices;
      for (const auto& text : vertex_texts) {
        try {
          vertices.push_back(parse_point2(text));
        } catch (const std::invalid_argument& e) {
          throw UsageError(std::string("--vertices: ") + e.what());
        }
      }
      const DomainTriangle tri{vertices[0], vertices[1], vertices[2]};
      const auto doc = load(tb_io.input, io.in);
      const auto& surface = expect_kind<MonomialSurface>(doc, "surface");
      if (is_degenerate(tri)) diag.warning("triangle vertices are collinear");
      write_output(tb_io.output, dump_document(to_json(subdivide_triangle(surface, tri))), io.out);
    } else if (eval_cmd->parsed()) {
      const auto doc = load(eval_io.input, io.in);
      std::vector<Rational> at;
      for (const auto& text : at_texts) at.push_back(rational_arg(text, "at"));
      const bool univariate =
          std::holds_alternative<MonomialCurve>(doc) || std::holds_alternative<BezierCurve>(doc);
      if (at.size() != (univariate ? 1U : 2U)) {
        throw UsageError(std::string("--at expects ") + (univariate ? "1 value" : "2 values") +
                         " for a '" + std::string(document_kind(doc)) + "' document");
      }
      const Point3 value = std::visit(
          [&](const auto& d) -> Point3 {
            using T = std::decay_t<decltype(d)>;
            if constexpr (std::is_same_v<T, MonomialCurve>) return eval_monomial_curve(d, at[0]);
            if constexpr (std::is_same_v<T, MonomialSurface>) {
              return eval_monomial_surface(d, at[0], at[1]);
            }
            if constexpr (std::is_same_v<T, BezierCurve>) return de_casteljau_curve(d, at[0]);
            if constexpr (std::is_same_v<T, TensorPatch>) return de_casteljau_tensor(d, at[0], at[1]);
            if constexpr (std::is_same_v<T, TrianglePatch>) {
              return de_casteljau_triangle(d, at[0], at[1]);
            }
          },
          doc);
      write_output(eval_io.output, point_line(value), io.out);
    } else if (verify_cmd->parsed()) {
      if (verify_opts.trials < 1) throw UsageError("--trials must be at least 1");
      if (verify_opts.max_degree < 0) throw UsageError("--max-degree must be non-negative");
      const VerifyReport report = run_verification(verify_opts);
      for (const auto& tally : report.tallies) {
        io.out << tally.shape << ": " << tally.cases << " cases, " << tally.control_points
               << " control points matched\n";
      }
      if (!report.passed()) {
        diag.error("closed form disagrees with the blossom oracle");
        io.out << dump_document(*report.counterexample);
        return kExitMismatch;
      }
      io.out << "all control points match\n";
    } else if (mesh_cmd->parsed()) {
      if (mesh_format != "obj") throw UsageError("unsupported mesh format '" + mesh_format + "'");
      if (mesh_opts.samples < 2) throw UsageError("--samples must be at least 2");
      const auto doc = load(mesh_io.input, io.in);
      write_output(mesh_io.output, mesh_obj(doc, mesh_opts), io.out);
    } else if (bench_cmd->parsed()) {
      for (const auto& name : split_list(shapes_text)) {
        try {
          bench_opts.shapes.push_back(parse_shape(name));
        } catch (const std::invalid_argument& e) {
          throw UsageError(e.what());
        }
      }
      for (const auto& text : split_list(degrees_text)) {
        try {
          std::size_t used = 0;
          const int degree = std::stoi(text, &used);
          if (used != text.size() || degree < 0) throw std::invalid_argument(text);
          bench_opts.degrees.push_back(degree);
        } catch (const std::exception&) {
          throw UsageError("invalid degree '" + text + "'");
        }
      }
      if (bench_opts.shapes.empty()) throw UsageError("--shapes is empty");
      if (bench_opts.degrees.empty()) throw UsageError("--degrees is empty");
      if (bench_opts.repeat < 1) throw UsageError("--repeat must be at least 1");
      const auto records =
          run_bench(bench_opts, [&](const std::string& message) { diag.warning(message); });
      write_output(bench_output, bench_csv(records), io.out);
    }
  } catch (const UsageError& e) {
    diag.error(e.what());
    return kExitUsage;
  } catch (const std::exception& e) {
    diag.error(e.what());
    return kExitMismatch;
  }
  return kExitOk;
}

}  // namespace blossom::cli
