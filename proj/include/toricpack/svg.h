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

#pragma once

#include <span>
#include <string>

#include "toricpack/delzant.h"
#include "toricpack/rational.h"

namespace toricpack {

inline constexpr long kSvgUnitPx = 100;
inline constexpr long kSvgMarginPx = 20;

/// Fixed-point rendering of an exact rational, rounded half away from zero
/// to `digits` fractional digits with trailing zeros dropped.
std::string FormatFixed(const Rational& value, int digits = 3);

/**
 * SVG 1.1 drawing of a polygon and, optionally, a packing (one radius per
 * vertex, zeros skipped). One unit is 100px, margin 20px, y points up.
 * Every polygon lists its points counterclockwise starting from its
 * lexicographically smallest vertex. Output depends only on the inputs.
 */
std::string RenderSvg(const DelzantPolygon& polygon,
                      std::span<const Rational> radii = {});

}  // namespace toricpack
