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

// The symmetric-difference metric on Delzant polygons and the experiments
// that probe how optimal density behaves near a polygon.

#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "toricpack/delzant.h"
#include "toricpack/packing.h"
#include "toricpack/rational.h"

namespace toricpack {

/// Area of the symmetric difference.
Rational Distance(const DelzantPolygon& p, const DelzantPolygon& q);

/// Chops every vertex at scale s. Requires 0 < s < (shortest edge) / 2;
/// the result has twice as many vertices, each with radius at most s.
DelzantPolygon ChopAll(const DelzantPolygon& polygon, const Rational& scale);

enum class Verdict {
  kDiscontinuityWitnessed,
  kNoDiscontinuityWitnessed,
  kContinuityConsistent,
  kContinuityViolated,
  kInconclusive,
};

std::string VerdictName(Verdict verdict);

struct ProbeStep {
  std::size_t index;
  std::string perturbation;  // "chop_all" or "support"
  Rational parameter;        // chop scale or side offset
  std::optional<std::size_t> side;
  Rational distance;
  DensityBounds density;
  /// Chop probes: 2N s^2 / 2 over the chopped area, an upper bound on any
  /// packing of the chopped polygon.
  std::optional<Rational> ceiling;
  /// Support probes: whether this step met the tolerance.
  std::optional<bool> within_tolerance;
};

struct ProbeReport {
  std::string base_id;
  DensityBounds base_density;
  std::vector<ProbeStep> steps;
  Verdict verdict = Verdict::kInconclusive;
  /// Chop probes: base lower bound minus the largest step upper bound.
  std::optional<Rational> achieved_gap;
};

struct DiscontinuityOptions {
  Rational gap = Rational(1, 10);
  SolverOptions solver;
};

/// Chops all corners at each scale and compares the solver's density upper
/// bound against the base density. Witnessed iff
/// base.lower - max_k upper_k >= gap.
ProbeReport DiscontinuityProbe(const DelzantPolygon& polygon,
                               std::span<const Rational> scales,
                               const DiscontinuityOptions& options = {},
                               std::string base_id = "base");

struct ContinuityOptions {
  /// Steps must satisfy |density - base| <= C sqrt(d). A harness heuristic.
  Rational tolerance_constant = 10;
  SolverOptions solver;
};

/// Translates side j by each delta. Consistent iff every step is certified
/// and within tolerance; inconclusive if any density is uncertified.
ProbeReport ContinuityProbe(const DelzantPolygon& polygon, std::size_t side,
                            std::span<const Rational> deltas,
                            const ContinuityOptions& options = {},
                            std::string base_id = "base");

/// Chop sequence near vertex i built from an optimal packing avoiding i:
/// chop at m / M (m = r_{v_i}) and shrink every radius by (1 - 1 / M).
struct WitnessStep {
  long denominator;
  Rational scale;
  Rational distance;
  Radii radii;  // indexed by the chopped polygon's vertices
  Rational density;
};

struct VertexWitness {
  std::size_t vertex;
  std::vector<WitnessStep> steps;
};

struct NeighborhoodReport {
  bool conclusive = false;
  DensityBounds omega;
  std::vector<DensityBounds> omega_avoiding;  // one per vertex
  /// Vertices with Omega_i == Omega (exact, only when conclusive).
  std::vector<std::size_t> density_preserving;
  /// True iff conclusive and density_preserving is empty.
  bool continuity_confined = false;
  std::vector<VertexWitness> witnesses;
};

struct ClassifierOptions {
  std::vector<long> witness_denominators = {4, 10, 100};
  SolverOptions solver;
};

NeighborhoodReport ClassifyNeighborhood(const DelzantPolygon& polygon,
                                        const ClassifierOptions& options = {});

/// Builds the chop-near-vertex witness for one M. `avoiding` must be an
/// admissible packing with radius 0 at `vertex`.
WitnessStep ChopWitness(const DelzantPolygon& polygon, std::size_t vertex,
                        std::span<const Rational> avoiding, long denominator);

}  // namespace toricpack
