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

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "toricpack/geometry.h"
#include "toricpack/rational.h"

namespace toricpack {

/// Edge i runs from vertex i to vertex i + 1 and equals length * direction.
struct DelzantEdge {
  IntVec direction;
  Rational length;
};

/// Primitive directions leaving a vertex: `next` points along the outgoing
/// edge, `prev` back along the incoming one. det(next, prev) == 1.
struct DelzantCorner {
  IntVec next;
  IntVec prev;
};

struct DelzantValidation;

/**
 * A convex lattice-direction polygon certified smooth at every vertex. In
 * the plane simplicity is automatic and rationality follows from rational
 * coordinates, so the certificate is the per-corner determinant.
 *
 * Instances only come out of Validate() (or the throwing Certify()), so
 * every live DelzantPolygon satisfies the invariants.
 */
class DelzantPolygon {
 public:
  const ConvexPolygon& polygon() const { return polygon_; }
  std::size_t size() const { return polygon_.size(); }
  const Point& vertex(std::size_t i) const { return polygon_.vertex(i); }
  std::span<const Point> vertices() const { return polygon_.vertices(); }
  /// Throw PreconditionError when out of range.
  const DelzantEdge& edge(std::size_t i) const;
  const DelzantCorner& corner(std::size_t i) const;

  friend bool operator==(const DelzantPolygon& a, const DelzantPolygon& b) {
    return a.polygon_ == b.polygon_;
  }

 private:
  friend DelzantValidation Validate(const ConvexPolygon& polygon);

  DelzantPolygon(ConvexPolygon polygon, std::vector<DelzantEdge> edges,
                 std::vector<DelzantCorner> corners)
      : polygon_(std::move(polygon)),
        edges_(std::move(edges)),
        corners_(std::move(corners)) {}

  ConvexPolygon polygon_;
  std::vector<DelzantEdge> edges_;
  std::vector<DelzantCorner> corners_;
};

struct Violation {
  std::size_t vertex;
  Point at;
  DelzantCorner corner;
  BigInt determinant;  // |det(next, prev)|, always != 1 here

  std::string Describe() const;
};

struct DelzantValidation {
  std::optional<DelzantPolygon> polygon;
  std::vector<Violation> violations;  // empty iff polygon is set

  bool ok() const { return polygon.has_value(); }
};

/// Never partial: either a certified polygon or the full violation list.
DelzantValidation Validate(const ConvexPolygon& polygon);

/// Validate() that throws DomainError listing the violations.
DelzantPolygon Certify(const ConvexPolygon& polygon);
DelzantPolygon Certify(std::vector<Point> vertices);

Rational EdgeRationalLength(const DelzantPolygon& polygon, std::size_t edge);

/// Largest admissible radius at vertex i: the shorter incident edge.
Rational VertexRadius(const DelzantPolygon& polygon, std::size_t vertex);

// Generators. Parameters must be positive; k must be non-negative.
DelzantPolygon StandardSimplex(const Rational& size);
DelzantPolygon Rectangle(const Rational& width, const Rational& height);
/// conv{(0,0), (a + k b, 0), (a, b), (0, b)}.
DelzantPolygon Hirzebruch(long k, const Rational& a, const Rational& b);

struct IntMatrix2 {
  BigInt m00, m01;
  BigInt m10, m11;

  BigInt determinant() const { return m00 * m11 - m01 * m10; }
  Point Apply(const Point& p) const;
};

/// x -> A x + c for unimodular A. Orientation-reversing maps have the vertex
/// order reversed (vertex 0 stays first) so the result is counterclockwise.
DelzantPolygon ApplyAgl(const DelzantPolygon& polygon, const IntMatrix2& a,
                        const Point& c);

/// Cuts vertex v down to the edge [v + s prev, v + s next]. The two new
/// vertices take indices i and i + 1; later vertices shift up by one.
/// Requires 0 < s < min of the two incident edge lengths.
DelzantPolygon Chop(const DelzantPolygon& polygon, std::size_t vertex,
                    const Rational& scale);

/**
 * Half-plane description {x : <x, n_j> <= c_j}. Side j carries edge j, so
 * the normals are already in counterclockwise angular order.
 */
struct SupportForm {
  std::vector<IntVec> normals;
  std::vector<Rational> offsets;
};

SupportForm ToSupportForm(const DelzantPolygon& polygon);
/// Rebuilds the polygon; throws PreconditionError if some side no longer
/// contributes a positive-length edge in its original direction.
DelzantPolygon FromSupportForm(const SupportForm& form);

/// Moves side j outward by delta (inward for negative delta) keeping the
/// normal fan. Throws PreconditionError when the combinatorics would change.
DelzantPolygon PerturbSupport(const DelzantPolygon& polygon, std::size_t side,
                              const Rational& delta);

}  // namespace toricpack
