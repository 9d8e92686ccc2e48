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

// Fixtures and hand-rolled generators shared by the test binaries.

#pragma once

#include <random>
#include <string>
#include <utility>
#include <vector>

#include "toricpack/delzant.h"
#include "toricpack/errors.h"
#include "toricpack/geometry.h"
#include "toricpack/rational.h"

namespace toricpack::testing {

inline Rational Q(const char* text) { return Rational::Parse(text); }

inline Point P(const Rational& x, const Rational& y) { return {x, y}; }

inline std::vector<Point> Pts(
    std::initializer_list<std::pair<Rational, Rational>> list) {
  std::vector<Point> out;
  for (const auto& [x, y] : list) out.push_back({x, y});
  return out;
}

inline DelzantPolygon UnitSquare() { return Rectangle(1, 1); }

inline DelzantPolygon ShearedSquare() {
  return ApplyAgl(UnitSquare(), IntMatrix2{1, 1, 0, 1}, P(0, 0));
}

struct Named {
  std::string name;
  DelzantPolygon polygon;
};

/// square, rectangle(2,1), simplex(1), hirzebruch(1,1,1), chopped square
/// (s = 1/4 at the origin), sheared square.
inline std::vector<Named> Catalog() {
  return {
      {"square", UnitSquare()},
      {"rectangle_2x1", Rectangle(2, 1)},
      {"simplex_1", StandardSimplex(1)},
      {"hirzebruch_1_1_1", Hirzebruch(1, 1, 1)},
      {"chopped_square", Chop(UnitSquare(), 0, Rational(1, 4))},
      {"sheared_square", ShearedSquare()},
  };
}

inline long Uniform(std::mt19937& rng, long lo, long hi) {
  return std::uniform_int_distribution<long>(lo, hi)(rng);
}

/// Integer matrix with |entries| <= bound and determinant +-1.
inline IntMatrix2 RandomUnimodular(std::mt19937& rng, long bound) {
  for (;;) {
    IntMatrix2 m{Uniform(rng, -bound, bound), Uniform(rng, -bound, bound),
                 Uniform(rng, -bound, bound), Uniform(rng, -bound, bound)};
    const BigInt det = m.determinant();
    if (det == 1 || det == -1) return m;
  }
}

/// Applies one random chop or side translation with parameter a multiple of
/// 1/step. Returns the input unchanged if the move is not possible.
inline DelzantPolygon RandomMove(std::mt19937& rng, const DelzantPolygon& d,
                                 long step, std::size_t max_vertices) {
  const bool chop = d.size() < max_vertices && Uniform(rng, 0, 1) == 0;
  try {
    if (chop) {
      const std::size_t i = Uniform(rng, 0, d.size() - 1);
      const Rational limit = VertexRadius(d, i) * step;
      const long k = Uniform(rng, 1, 2 * step);
      const Rational s(k, step);
      if (Rational(k) >= limit) return d;
      return Chop(d, i, s);
    }
    const std::size_t side = Uniform(rng, 0, d.size() - 1);
    long k = Uniform(rng, -step, step);
    if (k == 0) k = 1;
    return PerturbSupport(d, side, Rational(k, step));
  } catch (const PreconditionError&) {
    return d;
  }
}

/// Random Delzant polygon from a few catalog moves, coordinates on the
/// 1/step lattice when the catalog seed is.
inline DelzantPolygon RandomDelzant(std::mt19937& rng, std::size_t max_vertices,
                                    long step = 8, int moves = 3) {
  std::vector<Named> catalog = Catalog();
  std::vector<DelzantPolygon> seeds;
  for (Named& n : catalog) {
    if (n.polygon.size() <= max_vertices) seeds.push_back(n.polygon);
  }
  DelzantPolygon d = seeds[Uniform(rng, 0, seeds.size() - 1)];
  for (int m = 0; m < moves; ++m) d = RandomMove(rng, d, step, max_vertices);
  return d;
}

}  // namespace toricpack::testing
