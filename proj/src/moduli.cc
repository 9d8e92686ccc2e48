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

#include "toricpack/moduli.h"

#include <stdexcept>
#include <string>
#include <utility>

#include "toricpack/errors.h"
#include "toricpack/geometry.h"

namespace toricpack {

Rational Distance(const DelzantPolygon& p, const DelzantPolygon& q) {
  return SymmetricDifferenceArea(p.polygon(), q.polygon());
}

DelzantPolygon ChopAll(const DelzantPolygon& polygon, const Rational& scale) {
  Rational shortest = polygon.edge(0).length;
  for (std::size_t e = 1; e < polygon.size(); ++e) {
    shortest = Min(shortest, polygon.edge(e).length);
  }
  if (scale.sign() <= 0 || !(scale < shortest / 2)) {
    throw PreconditionError("chop_all scale " + scale.ToString() +
                            " must lie in (0, " + (shortest / 2).ToString() +
                            ")");
  }
  std::vector<Point> out;
  out.reserve(2 * polygon.size());
  for (std::size_t i = 0; i < polygon.size(); ++i) {
    const Point& v = polygon.vertex(i);
    const DelzantCorner& corner = polygon.corner(i);
    out.push_back(v + scale * corner.prev.ToPoint());
    out.push_back(v + scale * corner.next.ToPoint());
  }
  DelzantValidation result = Validate(ConvexPolygon(std::move(out)));
  if (!result.ok()) {
    throw std::logic_error("chop_all produced a non-Delzant polygon");
  }
  return *std::move(result.polygon);
}

std::string VerdictName(Verdict verdict) {
  switch (verdict) {
    case Verdict::kDiscontinuityWitnessed:
      return "discontinuity witnessed";
    case Verdict::kNoDiscontinuityWitnessed:
      return "no discontinuity witnessed";
    case Verdict::kContinuityConsistent:
      return "continuity consistent";
    case Verdict::kContinuityViolated:
      return "continuity violated";
    case Verdict::kInconclusive:
      return "inconclusive";
  }
  return "inconclusive";
}

ProbeReport DiscontinuityProbe(const DelzantPolygon& polygon,
                               std::span<const Rational> scales,
                               const DiscontinuityOptions& options,
                               std::string base_id) {
  ProbeReport report;
  report.base_id = std::move(base_id);
  report.base_density = OptimalDensity(polygon, {}, options.solver);
  const Rational vertex_count(static_cast<std::int64_t>(polygon.size()));

  std::optional<Rational> worst_upper;
  for (std::size_t k = 0; k < scales.size(); ++k) {
    const Rational& s = scales[k];
    DelzantPolygon chopped = ChopAll(polygon, s);
    ProbeStep step;
    step.index = k;
    step.perturbation = "chop_all";
    step.parameter = s;
    step.distance = Distance(polygon, chopped);
    step.density = OptimalDensity(chopped, {}, options.solver);
    step.ceiling = 2 * vertex_count * s * s / 2 / Area(chopped.polygon());
    if (!worst_upper || *worst_upper < step.density.upper) {
      worst_upper = step.density.upper;
    }
    report.steps.push_back(std::move(step));
  }
  if (!worst_upper) return report;
  report.achieved_gap = report.base_density.lower - *worst_upper;
  report.verdict = *report.achieved_gap >= options.gap
                       ? Verdict::kDiscontinuityWitnessed
                       : Verdict::kNoDiscontinuityWitnessed;
  return report;
}

ProbeReport ContinuityProbe(const DelzantPolygon& polygon, std::size_t side,
                            std::span<const Rational> deltas,
                            const ContinuityOptions& options,
                            std::string base_id) {
  ProbeReport report;
  report.base_id = std::move(base_id);
  report.base_density = OptimalDensity(polygon, {}, options.solver);
  const Rational c2 = options.tolerance_constant * options.tolerance_constant;

  bool all_certified = report.base_density.certified;
  bool all_within = true;
  for (std::size_t k = 0; k < deltas.size(); ++k) {
    DelzantPolygon moved = PerturbSupport(polygon, side, deltas[k]);
    ProbeStep step;
    step.index = k;
    step.perturbation = "support";
    step.parameter = deltas[k];
    step.side = side;
    step.distance = Distance(polygon, moved);
    step.density = OptimalDensity(moved, {}, options.solver);
    // |a - b| <= C sqrt(d)  <=>  (a - b)^2 <= C^2 d, kept exact.
    const Rational deviation = step.density.lower - report.base_density.lower;
    step.within_tolerance = deviation * deviation <= c2 * step.distance;
    all_certified = all_certified && step.density.certified;
    all_within = all_within && *step.within_tolerance;
    report.steps.push_back(std::move(step));
  }
  if (!all_certified) {
    report.verdict = Verdict::kInconclusive;
  } else {
    report.verdict = all_within ? Verdict::kContinuityConsistent
                                : Verdict::kContinuityViolated;
  }
  return report;
}

WitnessStep ChopWitness(const DelzantPolygon& polygon, std::size_t vertex,
                        std::span<const Rational> avoiding, long denominator) {
  if (denominator < 2) {
    throw PreconditionError("witness denominator must be at least 2");
  }
  if (avoiding.size() != polygon.size() || avoiding[vertex].sign() != 0) {
    throw PreconditionError("witness packing must avoid the chopped vertex");
  }
  const Rational m(denominator);
  WitnessStep step;
  step.denominator = denominator;
  step.scale = VertexRadius(polygon, vertex) / m;
  DelzantPolygon chopped = Chop(polygon, vertex, step.scale);
  step.distance = Distance(polygon, chopped);

  const Rational shrink = 1 - 1 / m;
  for (std::size_t j = 0; j < polygon.size(); ++j) {
    if (j == vertex) {
      step.radii.push_back(0);
      step.radii.push_back(0);
    } else {
      step.radii.push_back(avoiding[j] * shrink);
    }
  }
  step.density = PackingDensity(chopped, step.radii);
  return step;
}

NeighborhoodReport ClassifyNeighborhood(const DelzantPolygon& polygon,
                                        const ClassifierOptions& options) {
  NeighborhoodReport report;
  report.omega = OptimalDensity(polygon, {}, options.solver);
  bool all_certified = report.omega.certified;
  for (std::size_t i = 0; i < polygon.size(); ++i) {
    report.omega_avoiding.push_back(OmegaI(polygon, i, options.solver));
    all_certified = all_certified && report.omega_avoiding.back().certified;
  }
  report.conclusive = all_certified;
  if (!report.conclusive) return report;

  for (std::size_t i = 0; i < polygon.size(); ++i) {
    if (report.omega_avoiding[i].lower != report.omega.lower) continue;
    report.density_preserving.push_back(i);
    VertexWitness witness{i, {}};
    for (long m : options.witness_denominators) {
      witness.steps.push_back(
          ChopWitness(polygon, i, report.omega_avoiding[i].witness, m));
    }
    report.witnesses.push_back(std::move(witness));
  }
  report.continuity_confined = report.density_preserving.empty();
  return report;
}

}  // namespace toricpack
