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

#include "toricpack/geometry.h"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <string>
#include <utility>

#include "toricpack/errors.h"

namespace toricpack {
namespace {

std::string Describe(const Point& p) {
  std::ostringstream os;
  os << p;
  return os.str();
}

// Drops consecutive duplicates and vertices that make no turn (including
// back-tracking spikes) until the ring is stable.
std::vector<Point> CleanRing(std::vector<Point> ring) {
  bool changed = true;
  while (changed && ring.size() >= 3) {
    changed = false;
    std::vector<Point> next;
    next.reserve(ring.size());
    for (std::size_t i = 0; i < ring.size(); ++i) {
      if (!next.empty() && next.back() == ring[i]) continue;
      next.push_back(ring[i]);
    }
    while (next.size() > 1 && next.front() == next.back()) next.pop_back();
    for (std::size_t i = 0; i < next.size() && next.size() >= 3;) {
      const Point& prev = next[(i + next.size() - 1) % next.size()];
      const Point& here = next[i];
      const Point& succ = next[(i + 1) % next.size()];
      if (Cross(here - prev, succ - here).sign() == 0) {
        next.erase(next.begin() + static_cast<std::ptrdiff_t>(i));
        changed = true;
      } else {
        ++i;
      }
    }
    if (next.size() != ring.size()) changed = true;
    ring = std::move(next);
  }
  return ring;
}

}  // namespace

std::ostream& operator<<(std::ostream& os, const Point& p) {
  return os << "(" << p.x << "," << p.y << ")";
}

bool IntVec::is_primitive() const {
  if (is_zero()) return false;
  BigInt g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g == 1;
}

std::ostream& operator<<(std::ostream& os, const IntVec& v) {
  return os << "(" << v.a.get_str() << "," << v.b.get_str() << ")";
}

ConvexPolygon::ConvexPolygon(std::vector<Point> vertices)
    : vertices_(std::move(vertices)) {
  const std::size_t n = vertices_.size();
  if (n < 3) {
    throw DomainError("polygon needs at least 3 vertices, got " +
                      std::to_string(n));
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (vertices_[i] == vertices_[j]) {
        throw DomainError("repeated vertex " + Describe(vertices_[i]));
      }
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    const int turn = Cross(edge(i + n - 1), edge(i)).sign();
    if (turn == 0) {
      throw DomainError("collinear vertices at " + Describe(vertices_[i]));
    }
    if (turn < 0) {
      throw DomainError("not a counterclockwise strictly convex polygon at " +
                        Describe(vertices_[i]));
    }
  }
  // Left turns everywhere still admit orders that wind more than once, so
  // also require every other vertex strictly left of each edge.
  for (std::size_t i = 0; i < n; ++i) {
    const Point e = edge(i);
    for (std::size_t k = 2; k < n; ++k) {
      if (Cross(e, vertex(i + k) - vertices_[i]).sign() <= 0) {
        throw DomainError("vertex order winds more than once");
      }
    }
  }
}

bool ConvexPolygon::SameCycle(const ConvexPolygon& other) const {
  if (size() != other.size()) return false;
  const auto it = std::find(other.vertices_.begin(), other.vertices_.end(),
                            vertices_.front());
  if (it == other.vertices_.end()) return false;
  const std::size_t offset =
      static_cast<std::size_t>(it - other.vertices_.begin());
  for (std::size_t i = 0; i < size(); ++i) {
    if (!(vertices_[i] == other.vertex(i + offset))) return false;
  }
  return true;
}

Rational Area(const ConvexPolygon& polygon) {
  Rational twice;
  for (std::size_t i = 0; i < polygon.size(); ++i) {
    twice += Cross(polygon.vertex(i), polygon.vertex(i + 1));
  }
  return twice / 2;
}

std::optional<ConvexPolygon> IntersectConvex(const ConvexPolygon& p,
                                             const ConvexPolygon& q) {
  std::vector<Point> ring(p.vertices().begin(), p.vertices().end());
  for (std::size_t e = 0; e < q.size() && !ring.empty(); ++e) {
    const Point& a = q.vertex(e);
    const Point direction = q.edge(e);
    std::vector<Point> kept;
    kept.reserve(ring.size() + 1);
    for (std::size_t k = 0; k < ring.size(); ++k) {
      const Point& cur = ring[k];
      const Point& nxt = ring[(k + 1) % ring.size()];
      const Rational s_cur = Cross(direction, cur - a);
      const Rational s_nxt = Cross(direction, nxt - a);
      if (s_cur.sign() >= 0) kept.push_back(cur);
      if (s_cur.sign() * s_nxt.sign() < 0) {
        const Rational t = s_cur / (s_cur - s_nxt);
        kept.push_back(cur + t * (nxt - cur));
      }
    }
    ring = std::move(kept);
  }
  ring = CleanRing(std::move(ring));
  if (ring.size() < 3) return std::nullopt;
  return ConvexPolygon(std::move(ring));
}

Rational IntersectionArea(const ConvexPolygon& p, const ConvexPolygon& q) {
  const auto both = IntersectConvex(p, q);
  return both ? Area(*both) : Rational(0);
}

Rational SymmetricDifferenceArea(const ConvexPolygon& p,
                                 const ConvexPolygon& q) {
  return Area(p) + Area(q) - 2 * IntersectionArea(p, q);
}

PrimitiveDecomposition PrimitiveDecompose(const Point& w) {
  if (w.x.sign() == 0 && w.y.sign() == 0) {
    throw PreconditionError("cannot decompose the zero vector");
  }
  BigInt scale;
  const BigInt dx = w.x.denominator();
  const BigInt dy = w.y.denominator();
  mpz_lcm(scale.get_mpz_t(), dx.get_mpz_t(), dy.get_mpz_t());
  const BigInt ix = w.x.numerator() * (scale / dx);
  const BigInt iy = w.y.numerator() * (scale / dy);
  BigInt g;
  mpz_gcd(g.get_mpz_t(), ix.get_mpz_t(), iy.get_mpz_t());
  PrimitiveDecomposition out;
  out.direction = {ix / g, iy / g};
  out.length = Rational(g, scale);
  return out;
}

bool IsUnimodularPair(const IntVec& u, const IntVec& v) {
  const BigInt det = Det(u, v);
  return det == 1 || det == -1;
}

}  // namespace toricpack
