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

#include "toricpack/document.h"

#include <string>
#include <utility>
#include <vector>

#include "toricpack/errors.h"

namespace toricpack {

ConvexPolygon ParsePolygonDocument(std::string_view text) {
  Json document;
  try {
    document = Json::parse(text.begin(), text.end());
  } catch (const Json::parse_error& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what());
  }
  return PolygonFromJson(document);
}

ConvexPolygon PolygonFromJson(const Json& document) {
  if (!document.is_object()) throw ParseError("document must be an object");
  const auto version = document.find("version");
  if (version == document.end() || !version->is_number_integer()) {
    throw ParseError("missing integer field \"version\"");
  }
  if (version->get<long>() != kPolygonDocumentVersion) {
    throw ParseError("unsupported document version " + version->dump());
  }
  const auto list = document.find("vertices");
  if (list == document.end() || !list->is_array()) {
    throw ParseError("missing array field \"vertices\"");
  }
  std::vector<Point> vertices;
  for (const Json& pair : *list) {
    if (!pair.is_array() || pair.size() != 2) {
      throw ParseError("each vertex must be a pair of coordinate strings");
    }
    vertices.push_back({RationalFromJson(pair[0]), RationalFromJson(pair[1])});
  }
  return ConvexPolygon(std::move(vertices));
}

Json PolygonToJson(const ConvexPolygon& polygon) {
  Json vertices = Json::array();
  for (const Point& p : polygon.vertices()) {
    vertices.push_back(Json::array({p.x.ToString(), p.y.ToString()}));
  }
  Json document;
  document["version"] = kPolygonDocumentVersion;
  document["vertices"] = std::move(vertices);
  return document;
}

std::string SerializePolygonDocument(const ConvexPolygon& polygon) {
  // Canonical layout, one line per field. Rational strings never need
  // escaping.
  std::string out = "{\n  \"version\": " +
                    std::to_string(kPolygonDocumentVersion) +
                    ",\n  \"vertices\": [";
  for (std::size_t i = 0; i < polygon.size(); ++i) {
    const Point& p = polygon.vertex(i);
    if (i > 0) out += ", ";
    out += "[\"" + p.x.ToString() + "\", \"" + p.y.ToString() + "\"]";
  }
  out += "]\n}\n";
  return out;
}

Rational RationalFromJson(const Json& value) {
  if (!value.is_string()) {
    throw ParseError("expected a rational string, got " + value.dump());
  }
  return Rational::Parse(value.get<std::string>());
}

Json RationalToJson(const Rational& value) {
  return Json{{"value", value.ToString()}, {"decimal", value.ToDecimal(12)}};
}

Json IntVecToJson(const IntVec& v) {
  return Json::array({v.a.get_str(), v.b.get_str()});
}

Json RadiiToJson(std::span<const Rational> radii) {
  Json out = Json::array();
  for (const Rational& r : radii) out.push_back(r.ToString());
  return out;
}

Json DensityToJson(const DensityBounds& bounds) {
  Json out;
  out["lower"] = RationalToJson(bounds.lower);
  out["upper"] = RationalToJson(bounds.upper);
  out["certified"] = bounds.certified;
  out["witness"] = RadiiToJson(bounds.witness);
  return out;
}

Json ViolationToJson(const Violation& violation) {
  Json out;
  out["vertex"] = violation.vertex;
  out["at"] = Json::array({violation.at.x.ToString(), violation.at.y.ToString()});
  out["next"] = IntVecToJson(violation.corner.next);
  out["prev"] = IntVecToJson(violation.corner.prev);
  out["determinant"] = violation.determinant.get_str();
  return out;
}

Json CertificateToJson(const DelzantPolygon& polygon) {
  Json edges = Json::array();
  Json corners = Json::array();
  for (std::size_t i = 0; i < polygon.size(); ++i) {
    const DelzantEdge& edge = polygon.edge(i);
    edges.push_back(Json{{"index", i},
                         {"direction", IntVecToJson(edge.direction)},
                         {"length", RationalToJson(edge.length)}});
    const DelzantCorner& corner = polygon.corner(i);
    corners.push_back(Json{{"vertex", i},
                           {"next", IntVecToJson(corner.next)},
                           {"prev", IntVecToJson(corner.prev)},
                           {"determinant", Det(corner.next, corner.prev).get_str()},
                           {"radius", RationalToJson(VertexRadius(polygon, i))}});
  }
  Json out;
  out["edges"] = std::move(edges);
  out["corners"] = std::move(corners);
  return out;
}

std::string ProbeReportToJsonLines(const ProbeReport& report) {
  std::string out;
  for (const ProbeStep& step : report.steps) {
    Json record;
    record["record"] = "step";
    record["base"] = report.base_id;
    record["step"] = step.index;
    Json perturbation;
    perturbation["kind"] = step.perturbation;
    if (step.side) perturbation["side"] = *step.side;
    perturbation[step.perturbation == "chop_all" ? "scale" : "delta"] =
        step.parameter.ToString();
    record["perturbation"] = std::move(perturbation);
    record["distance"] = RationalToJson(step.distance);
    record["density"] = DensityToJson(step.density);
    if (step.ceiling) record["ceiling"] = RationalToJson(*step.ceiling);
    if (step.within_tolerance) record["within_tolerance"] = *step.within_tolerance;
    out += record.dump() + "\n";
  }
  Json summary;
  summary["record"] = "summary";
  summary["base"] = report.base_id;
  summary["steps"] = report.steps.size();
  summary["base_density"] = DensityToJson(report.base_density);
  if (report.achieved_gap) {
    summary["achieved_gap"] = RationalToJson(*report.achieved_gap);
  }
  summary["verdict"] = VerdictName(report.verdict);
  out += summary.dump() + "\n";
  return out;
}

Json NeighborhoodToJson(const NeighborhoodReport& report) {
  Json out;
  out["conclusive"] = report.conclusive;
  out["omega"] = DensityToJson(report.omega);
  Json avoiding = Json::array();
  for (const DensityBounds& b : report.omega_avoiding) {
    avoiding.push_back(DensityToJson(b));
  }
  out["omega_avoiding"] = std::move(avoiding);
  if (!report.conclusive) {
    out["classification"] = "inconclusive";
    return out;
  }
  out["density_preserving"] = report.density_preserving;
  out["classification"] = report.continuity_confined
                              ? "continuity confined to fixed vertex count"
                              : "density preserved by chopping";
  Json witnesses = Json::array();
  for (const VertexWitness& w : report.witnesses) {
    Json steps = Json::array();
    for (const WitnessStep& s : w.steps) {
      steps.push_back(Json{{"denominator", s.denominator},
                           {"scale", s.scale.ToString()},
                           {"distance", RationalToJson(s.distance)},
                           {"radii", RadiiToJson(s.radii)},
                           {"density", RationalToJson(s.density)}});
    }
    witnesses.push_back(Json{{"vertex", w.vertex}, {"steps", std::move(steps)}});
  }
  out["witnesses"] = std::move(witnesses);
  return out;
}

}  // namespace toricpack
