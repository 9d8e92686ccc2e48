// Copyright 2026 The toricpack Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "toricpack/cli.h"

#include <fstream>
#include <iterator>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "toricpack/delzant.h"
#include "toricpack/document.h"
#include "toricpack/errors.h"
#include "toricpack/moduli.h"
#include "toricpack/packing.h"
#include "toricpack/svg.h"

namespace toricpack {
namespace {

std::string ReadFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot read " + path);
  return std::string(std::istreambuf_iterator<char>(in),
                     std::istreambuf_iterator<char>());
}

DelzantPolygon LoadDelzant(const std::string& path) {
  return Certify(ParsePolygonDocument(ReadFile(path)));
}

std::vector<Rational> ParseList(const std::vector<std::string>& items) {
  std::vector<Rational> out;
  out.reserve(items.size());
  for (const std::string& s : items) out.push_back(Rational::Parse(s));
  return out;
}

long ParseInteger(const std::string& text, const char* what) {
  const Rational value = Rational::Parse(text);
  if (!value.is_integer() || !value.numerator().fits_slong_p()) {
    throw ParseError(std::string(what) + " must be an integer, got " + text);
  }
  return value.numerator().get_si();
}

// Writes to `path`, or to `out` when the path is empty.
void Emit(const std::string& text, const std::string& path, std::ostream& out) {
  if (path.empty()) {
    out << text;
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) throw PreconditionError("cannot write " + path);
  file << text;
}

std::string Pretty(const Json& document) { return document.dump(2) + "\n"; }

int CmdValidate(const std::string& path, std::ostream& out) {
  const ConvexPolygon polygon = ParsePolygonDocument(ReadFile(path));
  const DelzantValidation result = Validate(polygon);
  Json doc;
  doc["operation"] = "validate";
  doc["inputs"] = Json{{"path", path}};
  doc["valid"] = result.ok();
  if (result.ok()) {
    doc["certificate"] = CertificateToJson(*result.polygon);
  } else {
    Json violations = Json::array();
    for (const Violation& v : result.violations) {
      violations.push_back(ViolationToJson(v));
    }
    doc["violations"] = std::move(violations);
  }
  out << Pretty(doc);
  return result.ok() ? kExitOk : kExitDomain;
}

int CmdDensity(const std::string& path, const std::vector<std::size_t>& avoid,
               long refine_cap, std::ostream& out) {
  const DelzantPolygon polygon = LoadDelzant(path);
  SolverOptions options;
  options.refine_cap = refine_cap;
  const DensityBounds bounds = OptimalDensity(polygon, avoid, options);
  Json doc;
  doc["operation"] = "density";
  doc["inputs"] =
      Json{{"path", path}, {"avoid", avoid}, {"refine_cap", refine_cap}};
  Json result = DensityToJson(bounds);
  for (auto it = result.begin(); it != result.end(); ++it) {
    doc[it.key()] = it.value();
  }
  out << Pretty(doc);
  return kExitOk;
}

int CmdDistance(const std::string& a, const std::string& b, std::ostream& out) {
  const DelzantPolygon p = LoadDelzant(a);
  const DelzantPolygon q = LoadDelzant(b);
  Json doc;
  doc["operation"] = "distance";
  doc["inputs"] = Json{{"a", a}, {"b", b}};
  doc["distance"] = RationalToJson(Distance(p, q));
  out << Pretty(doc);
  return kExitOk;
}

struct ProbeArgs {
  std::string path;
  std::string mode;
  std::vector<std::string> params;
  std::size_t side = 0;
  bool side_given = false;
  std::string gap = "1/10";
  std::string tolerance = "10";
  long refine_cap = 64;
  std::string id;
};

int CmdProbe(const ProbeArgs& args, std::ostream& out) {
  const DelzantPolygon polygon = LoadDelzant(args.path);
  const std::vector<Rational> params = ParseList(args.params);
  const std::string id = args.id.empty() ? args.path : args.id;
  ProbeReport report;
  if (args.mode == "chop") {
    DiscontinuityOptions options;
    options.gap = Rational::Parse(args.gap);
    options.solver.refine_cap = args.refine_cap;
    report = DiscontinuityProbe(polygon, params, options, id);
  } else {
    if (!args.side_given) {
      throw ParseError("--side is required for --mode support");
    }
    ContinuityOptions options;
    options.tolerance_constant = Rational::Parse(args.tolerance);
    options.solver.refine_cap = args.refine_cap;
    report = ContinuityProbe(polygon, args.side, params, options, id);
  }
  out << ProbeReportToJsonLines(report);
  return kExitOk;
}

int CmdClassify(const std::string& path, const std::vector<long>& witness,
                long refine_cap, std::ostream& out) {
  const DelzantPolygon polygon = LoadDelzant(path);
  ClassifierOptions options;
  options.witness_denominators = witness;
  options.solver.refine_cap = refine_cap;
  Json doc;
  doc["operation"] = "classify";
  doc["inputs"] = Json{{"path", path}, {"witness", witness}};
  Json report = NeighborhoodToJson(ClassifyNeighborhood(polygon, options));
  for (auto it = report.begin(); it != report.end(); ++it) {
    doc[it.key()] = it.value();
  }
  out << Pretty(doc);
  return kExitOk;
}

DelzantPolygon Generate(const std::string& name,
                        const std::vector<std::string>& params) {
  auto expect = [&](std::size_t count) {
    if (params.size() != count) {
      throw ParseError("gen " + name + " takes " + std::to_string(count) +
                       " parameter(s)");
    }
  };
  if (name == "simplex") {
    expect(1);
    return StandardSimplex(Rational::Parse(params[0]));
  }
  if (name == "rectangle") {
    expect(2);
    return Rectangle(Rational::Parse(params[0]), Rational::Parse(params[1]));
  }
  if (name == "hirzebruch") {
    expect(3);
    return Hirzebruch(ParseInteger(params[0], "Hirzebruch twist"),
                      Rational::Parse(params[1]), Rational::Parse(params[2]));
  }
  throw ParseError("unknown generator \"" + name + "\"");
}

}  // namespace

int RunCli(const std::vector<std::string>& args, std::ostream& out,
           std::ostream& err) {
  CLI::App app{"Exact toolkit for Delzant polygons and simplex packings",
               "toricpack"};
  app.require_subcommand(1);

  std::string path, path_b, output;
  long refine_cap = 64;

  auto* validate = app.add_subcommand("validate", "Check the Delzant conditions");
  validate->add_option("path", path, "Polygon document")->required();

  std::vector<std::size_t> avoid;
  auto* density = app.add_subcommand("density", "Optimal packing density");
  density->add_option("path", path, "Polygon document")->required();
  density->add_option("--avoid", avoid, "Vertex forced to radius 0")
      ->delimiter(',');
  density->add_option("--refine-cap", refine_cap, "Largest refinement grid")
      ->check(CLI::PositiveNumber);

  auto* distance = app.add_subcommand("distance", "Symmetric-difference area");
  distance->add_option("a", path, "First polygon")->required();
  distance->add_option("b", path_b, "Second polygon")->required();

  std::size_t vertex = 0;
  std::string scale;
  auto* chop = app.add_subcommand("chop", "Cut a corner");
  chop->add_option("path", path, "Polygon document")->required();
  chop->add_option("--vertex", vertex, "Vertex index")->required();
  chop->add_option("--scale", scale, "Rational chop size")->required();
  chop->add_option("-o,--output", output, "Output file");

  std::size_t side = 0;
  std::string delta;
  auto* perturb = app.add_subcommand("perturb", "Translate one side");
  perturb->add_option("path", path, "Polygon document")->required();
  perturb->add_option("--side", side, "Side index")->required();
  perturb->add_option("--delta", delta, "Rational offset")->required();
  perturb->add_option("-o,--output", output, "Output file");

  ProbeArgs probe_args;
  auto* probe = app.add_subcommand("probe", "Continuity experiments");
  probe->add_option("path", probe_args.path, "Polygon document")->required();
  probe->add_option("--mode", probe_args.mode, "chop or support")
      ->required()
      ->check(CLI::IsMember({"chop", "support"}));
  probe->add_option("--params", probe_args.params,
                    "Comma-separated chop scales or side offsets")
      ->required()
      ->delimiter(',');
  auto* side_option =
      probe->add_option("--side", probe_args.side, "Side moved in support mode");
  probe->add_option("--gap", probe_args.gap, "Required density gap")
      ->capture_default_str();
  probe->add_option("--tolerance", probe_args.tolerance,
                    "C in |delta density| <= C sqrt(d)")
      ->capture_default_str();
  probe->add_option("--refine-cap", probe_args.refine_cap,
                    "Largest refinement grid")
      ->check(CLI::PositiveNumber);
  probe->add_option("--id", probe_args.id, "Base polygon label");

  std::vector<long> witness = {4, 10, 100};
  auto* classify = app.add_subcommand("classify", "Compare Omega_i with Omega");
  classify->add_option("path", path, "Polygon document")->required();
  classify->add_option("--witness", witness, "Chop denominators M")
      ->delimiter(',');
  classify->add_option("--refine-cap", refine_cap, "Largest refinement grid")
      ->check(CLI::PositiveNumber);

  std::string generator;
  std::vector<std::string> gen_params;
  auto* gen = app.add_subcommand("gen", "Standard polygons");
  gen->add_option("name", generator, "simplex | rectangle | hirzebruch")
      ->required();
  gen->add_option("params", gen_params, "Generator parameters")->required();
  gen->add_option("-o,--output", output, "Output file");

  std::vector<std::string> packing;
  auto* render = app.add_subcommand("render", "Draw as SVG");
  render->add_option("path", path, "Polygon document")->required();
  render->add_option("--packing", packing, "Comma-separated radii")
      ->delimiter(',');
  render->add_option("-o,--output", output, "Output SVG file");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitParse;
  }
  probe_args.side_given = side_option->count() > 0;

  try {
    if (validate->parsed()) return CmdValidate(path, out);
    if (density->parsed()) return CmdDensity(path, avoid, refine_cap, out);
    if (distance->parsed()) return CmdDistance(path, path_b, out);
    if (chop->parsed()) {
      const Rational s = Rational::Parse(scale);
      Emit(SerializePolygonDocument(Chop(LoadDelzant(path), vertex, s).polygon()),
           output, out);
      return kExitOk;
    }
    if (perturb->parsed()) {
      const Rational d = Rational::Parse(delta);
      Emit(SerializePolygonDocument(
               PerturbSupport(LoadDelzant(path), side, d).polygon()),
           output, out);
      return kExitOk;
    }
    if (probe->parsed()) return CmdProbe(probe_args, out);
    if (classify->parsed()) {
      return CmdClassify(path, witness, refine_cap, out);
    }
    if (gen->parsed()) {
      Emit(SerializePolygonDocument(Generate(generator, gen_params).polygon()),
           output, out);
      return kExitOk;
    }
    if (render->parsed()) {
      const DelzantPolygon polygon = LoadDelzant(path);
      Emit(RenderSvg(polygon, ParseList(packing)), output, out);
      return kExitOk;
    }
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return kExitParse;
  } catch (const DomainError& e) {
    err << "invalid polygon: " << e.what() << "\n";
    return kExitDomain;
  } catch (const PreconditionError& e) {
    err << "precondition failed: " << e.what() << "\n";
    return kExitPrecondition;
  }
  return kExitParse;
}

}  // namespace toricpack
