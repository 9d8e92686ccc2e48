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

// Admissible simplex packings of Delzant polygons and their optimal density.
//
// A packing puts at most one admissible simplex at each vertex, so it is
// just a radius vector indexed like the polygon's vertices (0 = no simplex).
// Two closed simplices are disjoint when their intersection has zero area;
// touching along an edge or at a point is allowed.

#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "toricpack/delzant.h"
#include "toricpack/geometry.h"
#include "toricpack/rational.h"

namespace toricpack {

using Radii = std::vector<Rational>;

/// The triangle (v, v + r next, v + r prev) at vertex `vertex`.
struct AdmissibleSimplex {
  std::size_t vertex;
  Rational radius;
  ConvexPolygon triangle;
};

/// Requires 0 < r <= VertexRadius(polygon, vertex), else PreconditionError.
AdmissibleSimplex SimplexAt(const DelzantPolygon& polygon, std::size_t vertex,
                            const Rational& radius);

/// Per-vertex bounds plus exact pairwise zero-area overlap. Throws
/// PreconditionError if radii.size() != polygon.size().
bool IsAdmissiblePacking(const DelzantPolygon& polygon,
                         std::span<const Rational> radii);

/// (sum r_i^2 / 2) / area. Throws PreconditionError for inadmissible radii.
Rational PackingDensity(const DelzantPolygon& polygon,
                        std::span<const Rational> radii);

/**
 * Upper bound from the relaxation
 *
 *   max sum r_i^2  s.t.  0 <= r_i <= r_{v_i},  r_i = 0 for avoided i,
 *                        r_i + r_{i+1} <= length(edge i),
 *
 * solved exactly by enumerating the vertices of the feasible polytope. The
 * edge constraint is necessary because both simplices put a leg on the
 * shared edge from opposite ends.
 */
struct RelaxationBound {
  Rational density;
  /// Lexicographically smallest maximizer.
  Radii radii;
  /// Every polytope vertex attaining the maximum, sorted lexicographically.
  std::vector<Radii> maximizers;
  /// Every polytope vertex, best objective first, ties lexicographic.
  std::vector<Radii> candidates;
};

RelaxationBound RelaxedUpperBound(const DelzantPolygon& polygon,
                                  std::span<const std::size_t> avoid = {});

struct DensityBounds {
  Rational lower;
  Rational upper;
  bool certified = false;
  /// Admissible packing whose density is exactly `lower`.
  Radii witness;
};

struct SolverOptions {
  /// Largest grid denominator used by the refinement fallback.
  long refine_cap = 64;
};

/// Optimal density over packings with r_i = 0 on `avoid`. Certified when a
/// relaxation maximizer is admissible; otherwise the lower bound comes from
/// grid refinement and the upper bound from the relaxation.
DensityBounds OptimalDensity(const DelzantPolygon& polygon,
                             std::span<const std::size_t> avoid = {},
                             const SolverOptions& options = {});

/// Optimal density avoiding vertex i.
DensityBounds OmegaI(const DelzantPolygon& polygon, std::size_t vertex,
                     const SolverOptions& options = {});

/**
 * Coordinate ascent over radii on the grid r_{v_i} k / q, q = 4, 8, ... up
 * to `refine_cap`, scanning vertices in ascending order. Only strictly
 * better admissible packings replace the incumbent, and per coordinate the
 * smallest of equally good values wins, so the result is deterministic.
 */
Radii RefinePacking(const DelzantPolygon& polygon,
                    std::span<const std::size_t> avoid, Radii incumbent,
                    long refine_cap);

}  // namespace toricpack
