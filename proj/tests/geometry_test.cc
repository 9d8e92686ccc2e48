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

#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "oracle.h"
#include "test_support.h"
#include "toricpack/errors.h"

namespace toricpack {
namespace {

using testing::P;
using testing::Pts;
using testing::Q;

ConvexPolygon Box(const Rational& x0, const Rational& y0, const Rational& x1,
                  const Rational& y1) {
  return ConvexPolygon(Pts({{x0, y0}, {x1, y0}, {x1, y1}, {x0, y1}}));
}

const ConvexPolygon kSquare = Box(0, 0, 1, 1);

TEST(ConvexPolygonTest, RejectsDegenerateInput) {
  EXPECT_THROW(ConvexPolygon(Pts({{0, 0}, {1, 0}})), DomainError);
  EXPECT_THROW(ConvexPolygon(Pts({{0, 0}, {1, 0}, {2, 0}})), DomainError);
  EXPECT_THROW(ConvexPolygon(Pts({{0, 0}, {1, 0}, {1, 0}, {0, 1}})),
               DomainError);
  // Clockwise.
  EXPECT_THROW(ConvexPolygon(Pts({{0, 0}, {0, 1}, {1, 1}, {1, 0}})),
               DomainError);
  // Collinear middle point.
  EXPECT_THROW(ConvexPolygon(Pts({{0, 0}, {1, 0}, {2, 0}, {2, 1}})),
               DomainError);
  // Reflex vertex.
  EXPECT_THROW(
      ConvexPolygon(Pts({{0, 0}, {2, 0}, {1, Q("1/2")}, {2, 2}, {0, 2}})),
      DomainError);
  // Pentagram: every turn is left, but it winds twice.
  EXPECT_THROW(ConvexPolygon(Pts({{0, 0}, {0, 2}, {-1, -1}, {2, 1}, {-2, 1}})),
               DomainError);
}

TEST(ConvexPolygonTest, SameCycleIgnoresRotationOnly) {
  const ConvexPolygon rotated(Pts({{1, 1}, {0, 1}, {0, 0}, {1, 0}}));
  EXPECT_TRUE(kSquare.SameCycle(rotated));
  EXPECT_FALSE(kSquare == rotated);
  EXPECT_FALSE(kSquare.SameCycle(Box(0, 0, 2, 1)));
}

TEST(AreaTest, Examples) {
  EXPECT_EQ(Area(kSquare), Rational(1));
  EXPECT_EQ(Area(ConvexPolygon(Pts({{0, 0}, {1, 0}, {0, 1}}))), Q("1/2"));
  const ConvexPolygon trapezoid(Pts({{0, 0}, {2, 0}, {1, 1}, {0, 1}}));
  EXPECT_EQ(Area(trapezoid), Q("3/2"));
  const auto estimate = oracle::EstimateIntersectionArea(
      trapezoid.vertices(), trapezoid.vertices(), 64);
  EXPECT_LE(std::abs(estimate.area - 1.5), estimate.error_bound);
}

TEST(IntersectConvexTest, Examples) {
  const auto same = IntersectConvex(kSquare, kSquare);
  ASSERT_TRUE(same.has_value());
  EXPECT_TRUE(same->SameCycle(kSquare));

  EXPECT_FALSE(IntersectConvex(kSquare, Box(2, 0, 3, 1)).has_value());

  const ConvexPolygon lower(Pts({{0, 0}, {1, 0}, {0, 1}}));
  const ConvexPolygon upper(Pts({{1, 0}, {1, 1}, {0, 1}}));
  EXPECT_FALSE(IntersectConvex(lower, upper).has_value());
  EXPECT_EQ(IntersectionArea(lower, upper), Rational(0));

  // Shared edge only.
  EXPECT_FALSE(IntersectConvex(kSquare, Box(1, 0, 2, 1)).has_value());
  // Single shared corner.
  EXPECT_FALSE(IntersectConvex(kSquare, Box(1, 1, 2, 2)).has_value());
}

TEST(IntersectConvexTest, OverlapIsConvexAndExact) {
  const auto overlap = IntersectConvex(Box(0, 0, 2, 2), Box(1, 1, 3, 3));
  ASSERT_TRUE(overlap.has_value());
  EXPECT_TRUE(overlap->SameCycle(Box(1, 1, 2, 2)));
  const ConvexPolygon diamond(Pts({{1, 0}, {2, 1}, {1, 2}, {0, 1}}));
  const auto cut = IntersectConvex(Box(0, 0, 2, 1), diamond);
  ASSERT_TRUE(cut.has_value());
  EXPECT_EQ(Area(*cut), Rational(1));
}

TEST(SymmetricDifferenceTest, Examples) {
  EXPECT_EQ(SymmetricDifferenceArea(kSquare, kSquare), Rational(0));
  EXPECT_EQ(SymmetricDifferenceArea(kSquare, Box(0, 0, 2, 2)), Rational(3));
  EXPECT_EQ(SymmetricDifferenceArea(kSquare, Box(0, 0, 2, 1)), Rational(1));
  EXPECT_EQ(SymmetricDifferenceArea(kSquare, Box(5, 5, 6, 7)), Rational(3));
}

TEST(PrimitiveDecomposeTest, Examples) {
  auto d = PrimitiveDecompose(P(2, 2));
  EXPECT_EQ(d.direction, (IntVec{1, 1}));
  EXPECT_EQ(d.length, Rational(2));
  d = PrimitiveDecompose(P(Q("-1/4"), Q("1/4")));
  EXPECT_EQ(d.direction, (IntVec{-1, 1}));
  EXPECT_EQ(d.length, Q("1/4"));
  d = PrimitiveDecompose(P(3, 0));
  EXPECT_EQ(d.direction, (IntVec{1, 0}));
  EXPECT_EQ(d.length, Rational(3));
  d = PrimitiveDecompose(P(Q("2/3"), Q("-4/5")));
  EXPECT_EQ(d.direction, (IntVec{5, -6}));
  EXPECT_EQ(d.length, Q("2/15"));
  EXPECT_THROW(PrimitiveDecompose(P(0, 0)), PreconditionError);
}

TEST(IntVecTest, Primitivity) {
  EXPECT_TRUE((IntVec{1, 0}).is_primitive());
  EXPECT_TRUE((IntVec{-3, 5}).is_primitive());
  EXPECT_FALSE((IntVec{2, -4}).is_primitive());
  EXPECT_FALSE((IntVec{0, 0}).is_primitive());
  EXPECT_TRUE((IntVec{0, 0}).is_zero());
}

TEST(IsUnimodularPairTest, Examples) {
  EXPECT_TRUE(IsUnimodularPair({1, 0}, {0, 1}));
  EXPECT_TRUE(IsUnimodularPair({1, 0}, {1, 1}));
  EXPECT_FALSE(IsUnimodularPair({1, 1}, {1, -1}));
  EXPECT_TRUE(IsUnimodularPair({0, 1}, {1, 0}));
}

// Random centrally symmetric convex polygon: edges along distinct
// directions of the upper half plane, walked forward then backward.
ConvexPolygon RandomConvex(std::mt19937& rng) {
  static const std::vector<Point> kDirections = {
      P(1, 0), P(2, 1), P(1, 1), P(1, 2), P(0, 1), P(-1, 2), P(-1, 1), P(-2, 1)};
  for (;;) {
    std::vector<Point> edges;
    for (const Point& d : kDirections) {
      if (testing::Uniform(rng, 0, 2) == 0) {
        edges.push_back(Rational(testing::Uniform(rng, 1, 6), 4) * d);
      }
    }
    if (edges.size() < 2) continue;
    const std::size_t half = edges.size();
    for (std::size_t k = 0; k < half; ++k) {
      edges.push_back(Rational(-1) * edges[k]);
    }
    std::vector<Point> vertices;
    Point at = P(testing::Uniform(rng, -2, 2), testing::Uniform(rng, -2, 2));
    for (const Point& e : edges) {
      vertices.push_back(at);
      at = at + e;
    }
    return ConvexPolygon(std::move(vertices));
  }
}

ConvexPolygon RandomShape(std::mt19937& rng) {
  const Rational x(testing::Uniform(rng, -8, 8), 4);
  const Rational y(testing::Uniform(rng, -8, 8), 4);
  const Rational w(testing::Uniform(rng, 1, 8), 4);
  const Rational h(testing::Uniform(rng, 1, 8), 4);
  switch (testing::Uniform(rng, 0, 3)) {
    case 0:
      return Box(x, y, x + w, y + h);
    case 1:
      return ConvexPolygon(Pts({{x, y}, {x + w, y}, {x, y + h}}));
    case 2:
      return RandomConvex(rng);
    default:
      return ConvexPolygon(Pts({{x + w, y},
                                {x + w + w, y + h},
                                {x + w, y + h + h},
                                {x, y + h}}));
  }
}

TEST(GeometryPropertyTest, SymmetricDifferenceIsAMetric) {
  std::mt19937 rng(101);
  for (int trial = 0; trial < 150; ++trial) {
    const ConvexPolygon a = RandomShape(rng);
    const ConvexPolygon b = RandomShape(rng);
    const ConvexPolygon c = RandomShape(rng);
    const Rational ab = SymmetricDifferenceArea(a, b);
    EXPECT_EQ(ab, SymmetricDifferenceArea(b, a));
    EXPECT_GE(ab, Rational(0));
    EXPECT_EQ(SymmetricDifferenceArea(a, a), Rational(0));
    EXPECT_LE(SymmetricDifferenceArea(a, c),
              ab + SymmetricDifferenceArea(b, c));
  }
}

TEST(GeometryPropertyTest, IntersectionAgreesWithGridEstimate) {
  std::mt19937 rng(202);
  for (int trial = 0; trial < 60; ++trial) {
    const ConvexPolygon a = RandomConvex(rng);
    const ConvexPolygon b = RandomShape(rng);
    const Rational exact = IntersectionArea(a, b);
    EXPECT_EQ(exact, IntersectionArea(b, a));
    EXPECT_LE(exact, Min(Area(a), Area(b)));
    EXPECT_GE(exact, Rational(0));
    const auto estimate =
        oracle::EstimateIntersectionArea(a.vertices(), b.vertices(), 64);
    EXPECT_LE(std::abs(estimate.area - exact.ToDouble()), estimate.error_bound)
        << "trial " << trial;
    if (const auto c = IntersectConvex(a, b)) {
      EXPECT_EQ(Area(*c), exact);
      EXPECT_GT(exact, Rational(0));
    } else {
      EXPECT_EQ(exact, Rational(0));
    }
  }
}

TEST(GeometryPropertyTest, PrimitiveDecomposeRoundTrips) {
  std::mt19937 rng(303);
  for (int trial = 0; trial < 500; ++trial) {
    const Point w{Rational(testing::Uniform(rng, -40, 40),
                           testing::Uniform(rng, 1, 12)),
                  Rational(testing::Uniform(rng, -40, 40),
                           testing::Uniform(rng, 1, 12))};
    if (w == P(0, 0)) continue;
    const auto d = PrimitiveDecompose(w);
    EXPECT_TRUE(d.direction.is_primitive());
    EXPECT_GT(d.length, Rational(0));
    EXPECT_EQ(d.length * d.direction.ToPoint(), w);
    EXPECT_EQ(d.length, oracle::LatticeLength(w));
  }
}

}  // namespace
}  // namespace toricpack
