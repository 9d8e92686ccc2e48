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

// JSON documents exchanged by the command-line tool.
//
// Polygon document:
//   {"version": 1, "vertices": [["0", "0"], ["1", "0"], ["1/2", "3/4"]]}
// Every number is a string holding an integer or a reduced fraction "p/q";
// floats never appear. Result documents carry rationals as
//   {"value": "2/3", "decimal": "0.666666666667"}
// where only "value" is authoritative.

#pragma once

#include "json.hpp"

#include <span>
#include <string>
#include <string_view>

#include "toricpack/delzant.h"
#include "toricpack/geometry.h"
#include "toricpack/moduli.h"
#include "toricpack/packing.h"
#include "toricpack/rational.h"

namespace toricpack {

using Json = nlohmann::ordered_json;

inline constexpr int kPolygonDocumentVersion = 1;

/// Throws ParseError for malformed JSON or fields and DomainError when the
/// vertices do not form a strictly convex counterclockwise polygon.
ConvexPolygon ParsePolygonDocument(std::string_view text);
ConvexPolygon PolygonFromJson(const Json& document);

Json PolygonToJson(const ConvexPolygon& polygon);
/// Canonical text: {"version": 1, "vertices": [...]} on three lines.
std::string SerializePolygonDocument(const ConvexPolygon& polygon);

/// Throws ParseError unless `value` is a string holding a rational.
Rational RationalFromJson(const Json& value);

Json RationalToJson(const Rational& value);
Json IntVecToJson(const IntVec& v);
Json RadiiToJson(std::span<const Rational> radii);
Json DensityToJson(const DensityBounds& bounds);
Json ViolationToJson(const Violation& violation);
Json CertificateToJson(const DelzantPolygon& polygon);

/// One compact JSON object per line: a "step" record per probe step, then a
/// "summary" record with the verdict.
std::string ProbeReportToJsonLines(const ProbeReport& report);
Json NeighborhoodToJson(const NeighborhoodReport& report);

}  // namespace toricpack
