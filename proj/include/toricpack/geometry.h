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

// Exact planar geometry over Rational. Nothing in here touches floating
// point.

#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <ostream>
#include <span>
#include <utility>
#include <vector>

#include "toricpack/rational.h"

namespace toricpack {

/// A point or a displacement in the rational plane.
struct Point {
  Rational x;
  Rational y;

  friend bool operator==(const Point&, const Point&) = default;
  /// Lexicographic: x first, then y.
  friend std::strong_ordering operator<=>(const Point& a, const Point& b) {
    if (auto c = a.x <=> b.x; c != 0) return c;
    return a.y <=> b.y;
  }
};

inline Point operator+(const Point& a, const Point& b) {
  return {a.x + b.x, a.y + b.y};
}
inline Point operator-(const Point& a, const Point& b) {
  return {a.x - b.x, a.y - b.y};
}
inline Point operator*(const Rational& s, const Point& p) {
  return {s * p.x, s * p.y};
}

/// z-component of a x b.
inline Rational Cross(const Point& a, const Point& b) {
  return a.x * b.y - a.y * b.x;
}
inline Rational Dot(const Point& a, const Point& b) {
  return a.x * b.x + a.y * b.y;
}

std::ostream& operator<<(std::ostream& os, const Point& p);

/// Integer lattice vector, used for edge directions and normals.
struct IntVec {
  BigInt a;
  BigInt b;

  friend bool operator==(const IntVec& u, const IntVec& v) {
    return u.a == v.a && u.b == v.b;
  }

  bool is_zero() const { return a == 0 && b == 0; }
  /// gcd(|a|, |b|) == 1.
  bool is_primitive() const;
  Point ToPoint() const { return {Rational(a), Rational(b)}; }
  IntVec operator-() const { return {-a, -b}; }
};

inline BigInt Det(const IntVec& u, const IntVec& v) {
  return u.a * v.b - u.b * v.a;
}

std::ostream& operator<<(std::ostream& os, const IntVec& v);

/**
 * Strictly convex polygon with counterclockwise vertices. The constructor
 * rejects fewer than three vertices, repeated vertices, collinear triples
 * and clockwise or self-overlapping vertex orders by throwing DomainError.
 */
class ConvexPolygon {
 public:
  explicit ConvexPolygon(std::vector<Point> vertices);

  std::size_t size() const { return vertices_.size(); }
  std::span<const Point> vertices() const { return vertices_; }
  /// Cyclic access, index taken modulo size().
  const Point& vertex(std::size_t i) const {
    return vertices_[i % vertices_.size()];
  }
  /// Displacement from vertex i to vertex i + 1.
  Point edge(std::size_t i) const { return vertex(i + 1) - vertex(i); }

  /// Same cyclic vertex sequence, possibly starting elsewhere.
  bool SameCycle(const ConvexPolygon& other) const;

  friend bool operator==(const ConvexPolygon&, const ConvexPolygon&) = default;

 private:
  std::vector<Point> vertices_;
};

/// Shoelace area; strictly positive for any valid polygon.
Rational Area(const ConvexPolygon& polygon);

/// Exact intersection by half-plane clipping. Returns nullopt when the
/// intersection has zero area, so point and segment contacts are empty.
std::optional<ConvexPolygon> IntersectConvex(const ConvexPolygon& p,
                                             const ConvexPolygon& q);

/// Area of the intersection, zero when IntersectConvex is empty.
Rational IntersectionArea(const ConvexPolygon& p, const ConvexPolygon& q);

/// area(P) + area(Q) - 2 area(P n Q).
Rational SymmetricDifferenceArea(const ConvexPolygon& p,
                                 const ConvexPolygon& q);

/// Unique factorization w = length * direction with direction primitive and
/// length > 0. Throws PreconditionError for the zero vector.
struct PrimitiveDecomposition {
  IntVec direction;
  Rational length;
};
PrimitiveDecomposition PrimitiveDecompose(const Point& w);

/// |det(u, v)| == 1.
bool IsUnimodularPair(const IntVec& u, const IntVec& v);

}  // namespace toricpack
