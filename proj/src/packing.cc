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

#include "toricpack/packing.h"

#include <algorithm>
#include <optional>
#include <string>
#include <utility>

#include "toricpack/errors.h"

namespace toricpack {
namespace {

std::vector<bool> AvoidMask(const DelzantPolygon& polygon,
                            std::span<const std::size_t> avoid) {
  std::vector<bool> mask(polygon.size(), false);
  for (std::size_t i : avoid) {
    if (i >= polygon.size()) {
      throw PreconditionError("avoided vertex " + std::to_string(i) +
                              " out of range");
    }
    mask[i] = true;
  }
  return mask;
}

Rational SumOfSquares(std::span<const Rational> radii) {
  Rational total;
  for (const Rational& r : radii) total += r * r;
  return total;
}

bool SimplicesDisjoint(const DelzantPolygon& polygon, std::size_t i,
                       const Rational& ri, std::size_t j, const Rational& rj) {
  if (ri.sign() == 0 || rj.sign() == 0) return true;
  const std::size_t n = polygon.size();
  if ((i + 1) % n == j && ri + rj > polygon.edge(i).length) return false;
  if ((j + 1) % n == i && ri + rj > polygon.edge(j).length) return false;
  return !IntersectConvex(SimplexAt(polygon, i, ri).triangle,
                          SimplexAt(polygon, j, rj).triangle)
              .has_value();
}

// Admissibility of `radii` assuming only coordinate `changed` differs from
// an admissible vector.
bool AdmissibleAfterChange(const DelzantPolygon& polygon, const Radii& radii,
                           std::size_t changed) {
  const Rational& r = radii[changed];
  if (r.sign() < 0 || r > VertexRadius(polygon, changed)) return false;
  for (std::size_t j = 0; j < radii.size(); ++j) {
    if (j == changed) continue;
    if (!SimplicesDisjoint(polygon, changed, r, j, radii[j])) return false;
  }
  return true;
}

// Vertex enumeration for the relaxation. At a vertex of the feasible
// polytope every radius is either pinned to a bound (0 or its cap) or is
// determined by a tight edge constraint with its left or right neighbour.
// A right-determined radius followed by a left-determined one would share
// a single equation, so that pattern is skipped. Rotating the cycle to
// start at the first pinned radius makes every dependency chain end at a
// known value; the only vertex with no pinned radius is the all-tight odd
// cycle, handled separately.
class RelaxationEnumerator {
 public:
  RelaxationEnumerator(const DelzantPolygon& polygon,
                       const std::vector<bool>& avoid)
      : n_(polygon.size()), values_(n_), known_(n_, false) {
    for (std::size_t i = 0; i < n_; ++i) {
      caps_.push_back(avoid[i] ? Rational(0) : VertexRadius(polygon, i));
      edges_.push_back(polygon.edge(i).length);
    }
  }

  std::vector<Radii> Run() {
    for (start_ = 0; start_ < n_; ++start_) {
      for (const Rational& pin : Pins(start_)) {
        Assign(start_, pin);
        Extend(1, {});
        Unassign(start_);
      }
    }
    if (n_ % 2 == 1) AddOddCycle();
    std::sort(found_.begin(), found_.end());
    found_.erase(std::unique(found_.begin(), found_.end()), found_.end());
    return std::move(found_);
  }

 private:
  std::vector<Rational> Pins(std::size_t i) const {
    if (caps_[i].sign() == 0) return {Rational(0)};
    return {Rational(0), caps_[i]};
  }

  bool InBox(std::size_t i, const Rational& x) const {
    return x.sign() >= 0 && x <= caps_[i];
  }

  void Assign(std::size_t i, const Rational& x) {
    values_[i] = x;
    known_[i] = true;
  }
  void Unassign(std::size_t i) { known_[i] = false; }

  // `pending` holds consecutive right-determined indices awaiting the value
  // of their right neighbour. Resolving them back to front.
  bool Resolve(const std::vector<std::size_t>& pending,
               std::vector<std::size_t>& assigned) {
    for (auto it = pending.rbegin(); it != pending.rend(); ++it) {
      const std::size_t j = *it;
      const Rational x = edges_[j] - values_[(j + 1) % n_];
      if (!InBox(j, x)) return false;
      Assign(j, x);
      assigned.push_back(j);
    }
    return true;
  }

  void Extend(std::size_t step, std::vector<std::size_t> pending) {
    if (step == n_) {
      std::vector<std::size_t> assigned;
      if (Resolve(pending, assigned)) Record();
      for (std::size_t j : assigned) Unassign(j);
      return;
    }
    const std::size_t i = (start_ + step) % n_;
    const std::size_t prev = (i + n_ - 1) % n_;
    const bool wrapped = start_ + step >= n_;

    if (!wrapped) {
      for (const Rational& pin : Pins(i)) {
        Assign(i, pin);
        std::vector<std::size_t> assigned;
        if (Resolve(pending, assigned) && EdgeOk(prev)) Extend(step + 1, {});
        for (std::size_t j : assigned) Unassign(j);
        Unassign(i);
      }
    }
    if (pending.empty() && caps_[i].sign() > 0) {
      const Rational x = edges_[prev] - values_[prev];
      if (InBox(i, x)) {
        Assign(i, x);
        Extend(step + 1, {});
        Unassign(i);
      }
    }
    if (caps_[i].sign() > 0) {
      pending.push_back(i);
      Extend(step + 1, std::move(pending));
    }
  }

  bool EdgeOk(std::size_t e) const {
    const std::size_t f = (e + 1) % n_;
    if (!known_[e] || !known_[f]) return true;
    return values_[e] + values_[f] <= edges_[e];
  }

  void Record() {
    for (std::size_t e = 0; e < n_; ++e) {
      if (!EdgeOk(e)) return;
    }
    found_.push_back(values_);
  }

  void AddOddCycle() {
    // x_0 = (l_0 - l_1 + l_2 - ... + l_{n-1}) / 2, then propagate.
    Rational alternating;
    for (std::size_t e = 0; e < n_; ++e) {
      alternating += e % 2 == 0 ? edges_[e] : -edges_[e];
    }
    Radii x(n_);
    x[0] = alternating / 2;
    for (std::size_t i = 1; i < n_; ++i) x[i] = edges_[i - 1] - x[i - 1];
    for (std::size_t i = 0; i < n_; ++i) {
      if (!InBox(i, x[i])) return;
    }
    found_.push_back(std::move(x));
  }

  std::size_t n_;
  std::vector<Rational> caps_;
  std::vector<Rational> edges_;
  Radii values_;
  std::vector<bool> known_;
  std::size_t start_ = 0;
  std::vector<Radii> found_;
};

}  // namespace

AdmissibleSimplex SimplexAt(const DelzantPolygon& polygon, std::size_t vertex,
                            const Rational& radius) {
  const Rational limit = VertexRadius(polygon, vertex);
  if (radius.sign() <= 0 || radius > limit) {
    throw PreconditionError("simplex radius " + radius.ToString() +
                            " outside (0, " + limit.ToString() +
                            "] at vertex " + std::to_string(vertex));
  }
  const Point& v = polygon.vertex(vertex);
  const DelzantCorner& corner = polygon.corner(vertex);
  return {vertex, radius,
          ConvexPolygon({v, v + radius * corner.next.ToPoint(),
                         v + radius * corner.prev.ToPoint()})};
}

bool IsAdmissiblePacking(const DelzantPolygon& polygon,
                         std::span<const Rational> radii) {
  if (radii.size() != polygon.size()) {
    throw PreconditionError("packing has " + std::to_string(radii.size()) +
                            " radii for " + std::to_string(polygon.size()) +
                            " vertices");
  }
  for (std::size_t i = 0; i < radii.size(); ++i) {
    if (radii[i].sign() < 0 || radii[i] > VertexRadius(polygon, i)) {
      return false;
    }
  }
  std::vector<std::optional<ConvexPolygon>> simplices(radii.size());
  for (std::size_t i = 0; i < radii.size(); ++i) {
    if (radii[i].sign() > 0) {
      simplices[i] = SimplexAt(polygon, i, radii[i]).triangle;
    }
  }
  const std::size_t n = radii.size();
  for (std::size_t i = 0; i < n; ++i) {
    if (!simplices[i]) continue;
    for (std::size_t j = i + 1; j < n; ++j) {
      if (!simplices[j]) continue;
      if (IntersectConvex(*simplices[i], *simplices[j])) return false;
    }
  }
  return true;
}

Rational PackingDensity(const DelzantPolygon& polygon,
                        std::span<const Rational> radii) {
  if (!IsAdmissiblePacking(polygon, radii)) {
    throw PreconditionError("packing is not admissible");
  }
  return SumOfSquares(radii) / 2 / Area(polygon.polygon());
}

RelaxationBound RelaxedUpperBound(const DelzantPolygon& polygon,
                                  std::span<const std::size_t> avoid) {
  std::vector<Radii> vertices =
      RelaxationEnumerator(polygon, AvoidMask(polygon, avoid)).Run();

  std::vector<std::pair<Rational, Radii>> scored;
  scored.reserve(vertices.size());
  for (Radii& r : vertices) {
    Rational objective = SumOfSquares(r);
    scored.emplace_back(std::move(objective), std::move(r));
  }
  std::stable_sort(scored.begin(), scored.end(),
                   [](const auto& a, const auto& b) { return a.first > b.first; });

  RelaxationBound out;
  const Rational best = scored.front().first;
  out.density = best / 2 / Area(polygon.polygon());
  for (auto& [objective, radii] : scored) {
    if (objective == best) out.maximizers.push_back(radii);
    out.candidates.push_back(std::move(radii));
  }
  out.radii = out.maximizers.front();
  return out;
}

Radii RefinePacking(const DelzantPolygon& polygon,
                    std::span<const std::size_t> avoid, Radii incumbent,
                    long refine_cap) {
  const std::vector<bool> mask = AvoidMask(polygon, avoid);
  if (!IsAdmissiblePacking(polygon, incumbent)) {
    throw PreconditionError("refinement needs an admissible incumbent");
  }
  Rational best = SumOfSquares(incumbent);
  for (long q = 4; q <= refine_cap; q *= 2) {
    bool improved = true;
    while (improved) {
      improved = false;
      for (std::size_t i = 0; i < polygon.size(); ++i) {
        if (mask[i]) continue;
        const Rational cap = VertexRadius(polygon, i);
        const Rational others = best - incumbent[i] * incumbent[i];
        std::optional<Rational> choice;
        // Admissible values of one coordinate form a down-set, so the first
        // admissible value scanning down is the best one.
        for (long k = q; k >= 0; --k) {
          Radii trial = incumbent;
          trial[i] = cap * Rational(k) / Rational(q);
          if (others + trial[i] * trial[i] <= best) break;
          if (AdmissibleAfterChange(polygon, trial, i)) {
            choice = trial[i];
            break;
          }
        }
        if (choice) {
          incumbent[i] = *choice;
          best = others + *choice * *choice;
          improved = true;
        }
      }
    }
  }
  return incumbent;
}

DensityBounds OptimalDensity(const DelzantPolygon& polygon,
                             std::span<const std::size_t> avoid,
                             const SolverOptions& options) {
  RelaxationBound relaxation = RelaxedUpperBound(polygon, avoid);
  DensityBounds out;
  out.upper = relaxation.density;
  for (const Radii& r : relaxation.maximizers) {
    if (IsAdmissiblePacking(polygon, r)) {
      out.lower = out.upper;
      out.certified = true;
      out.witness = r;
      return out;
    }
  }
  // Candidates are best-first and every single-simplex packing is one of
  // them, so this always finds an admissible start.
  Radii start;
  for (const Radii& r : relaxation.candidates) {
    if (IsAdmissiblePacking(polygon, r)) {
      start = r;
      break;
    }
  }
  out.witness = RefinePacking(polygon, avoid, std::move(start),
                              options.refine_cap);
  out.lower = PackingDensity(polygon, out.witness);
  out.certified = out.lower == out.upper;
  return out;
}

DensityBounds OmegaI(const DelzantPolygon& polygon, std::size_t vertex,
                     const SolverOptions& options) {
  if (vertex >= polygon.size()) {
    throw PreconditionError("vertex " + std::to_string(vertex) +
                            " out of range");
  }
  const std::size_t avoid[] = {vertex};
  return OptimalDensity(polygon, avoid, options);
}

}  // namespace toricpack
