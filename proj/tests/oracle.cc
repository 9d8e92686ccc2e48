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

#include "oracle.h"

#include <algorithm>
#include <cmath>
#include <functional>

namespace toricpack::oracle {
namespace {

// Projection interval of a triangle onto `axis`.
std::pair<Rational, Rational> Project(const Triangle& t, const Point& axis) {
  Rational lo = Dot(t[0], axis), hi = lo;
  for (int k = 1; k < 3; ++k) {
    const Rational d = Dot(t[k], axis);
    lo = Min(lo, d);
    hi = Max(hi, d);
  }
  return {lo, hi};
}

bool SeparatedAlongEdgesOf(const Triangle& t, const Triangle& a,
                           const Triangle& b) {
  for (int k = 0; k < 3; ++k) {
    const Point e = t[(k + 1) % 3] - t[k];
    const Point normal{-e.y, e.x};
    const auto [alo, ahi] = Project(a, normal);
    const auto [blo, bhi] = Project(b, normal);
    if (ahi <= blo || bhi <= alo) return true;
  }
  return false;
}

bool InsideConvex(std::span<const Point> ring, double x, double y) {
  for (std::size_t i = 0; i < ring.size(); ++i) {
    const Point& a = ring[i];
    const Point& b = ring[(i + 1) % ring.size()];
    const double ax = a.x.ToDouble(), ay = a.y.ToDouble();
    const double cross = (b.x.ToDouble() - ax) * (y - ay) -
                         (b.y.ToDouble() - ay) * (x - ax);
    if (cross < 0) return false;
  }
  return true;
}

double Perimeter(std::span<const Point> ring) {
  double total = 0;
  for (std::size_t i = 0; i < ring.size(); ++i) {
    const Point d = ring[(i + 1) % ring.size()] - ring[i];
    total += std::hypot(d.x.ToDouble(), d.y.ToDouble());
  }
  return total;
}

}  // namespace

bool TrianglesOverlap(const Triangle& a, const Triangle& b) {
  return !SeparatedAlongEdgesOf(a, a, b) && !SeparatedAlongEdgesOf(b, a, b);
}

Rational LatticeLength(const Point& w) {
  BigInt lcm;
  const BigInt dx = w.x.denominator(), dy = w.y.denominator();
  mpz_lcm(lcm.get_mpz_t(), dx.get_mpz_t(), dy.get_mpz_t());
  const BigInt ix = w.x.numerator() * (lcm / dx);
  const BigInt iy = w.y.numerator() * (lcm / dy);
  BigInt g;
  mpz_gcd(g.get_mpz_t(), ix.get_mpz_t(), iy.get_mpz_t());
  return Rational(g, lcm);
}

Triangle CornerTriangle(std::span<const Point> vertices, std::size_t i,
                        const Rational& r) {
  const std::size_t n = vertices.size();
  const Point& v = vertices[i];
  const Point to_next = vertices[(i + 1) % n] - v;
  const Point to_prev = vertices[(i + n - 1) % n] - v;
  return {v, v + (r / LatticeLength(to_next)) * to_next,
          v + (r / LatticeLength(to_prev)) * to_prev};
}

Rational ShoelaceArea(std::span<const Point> vertices) {
  Rational twice;
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    const Point& a = vertices[i];
    const Point& b = vertices[(i + 1) % vertices.size()];
    twice += a.x * b.y - a.y * b.x;
  }
  return twice / 2;
}

GridSearchResult GridSearchDensity(std::span<const Point> vertices,
                                   long denominator,
                                   std::span<const std::size_t> avoid) {
  const std::size_t n = vertices.size();
  const Rational q(denominator);
  std::vector<long> max_k(n);
  for (std::size_t i = 0; i < n; ++i) {
    const Rational cap =
        Min(LatticeLength(vertices[(i + 1) % n] - vertices[i]),
            LatticeLength(vertices[(i + n - 1) % n] - vertices[i]));
    // floor(cap * q)
    const Rational scaled = cap * q;
    BigInt k;
    mpz_fdiv_q(k.get_mpz_t(), scaled.numerator().get_mpz_t(),
               scaled.denominator().get_mpz_t());
    max_k[i] = k.get_si();
  }
  for (std::size_t i : avoid) max_k[i] = 0;

  // ok[i][j][ki * (max_k[j] + 1) + kj] for i < j.
  std::vector<std::vector<std::vector<bool>>> ok(
      n, std::vector<std::vector<bool>>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      auto& table = ok[i][j];
      table.assign((max_k[i] + 1) * (max_k[j] + 1), true);
      for (long ki = 1; ki <= max_k[i]; ++ki) {
        const Triangle ti = CornerTriangle(vertices, i, Rational(ki) / q);
        for (long kj = 1; kj <= max_k[j]; ++kj) {
          const Triangle tj = CornerTriangle(vertices, j, Rational(kj) / q);
          table[ki * (max_k[j] + 1) + kj] = !TrianglesOverlap(ti, tj);
        }
      }
    }
  }

  std::vector<long> current(n, 0), best(n, 0);
  long best_score = 0;
  long admissible = 0;
  std::function<void(std::size_t, long)> dfs = [&](std::size_t i, long score) {
    if (i == n) {
      ++admissible;
      if (score > best_score) {
        best_score = score;
        best = current;
      }
      return;
    }
    for (long k = 0; k <= max_k[i]; ++k) {
      bool fits = true;
      for (std::size_t j = 0; j < i && fits; ++j) {
        fits = ok[j][i][current[j] * (max_k[i] + 1) + k];
      }
      if (!fits) break;  // admissible values form a down-set
      current[i] = k;
      dfs(i + 1, score + k * k);
    }
    current[i] = 0;
  };
  dfs(0, 0);

  GridSearchResult out;
  out.admissible_count = admissible;
  for (long k : best) out.radii.push_back(Rational(k) / q);
  out.density =
      Rational(best_score) / (q * q) / 2 / ShoelaceArea(vertices);
  return out;
}

GridAreaEstimate EstimateIntersectionArea(std::span<const Point> p,
                                          std::span<const Point> q,
                                          long cells_per_unit) {
  double lo_x = 1e300, lo_y = 1e300, hi_x = -1e300, hi_y = -1e300;
  for (const Point& v : p) {
    lo_x = std::min(lo_x, v.x.ToDouble());
    lo_y = std::min(lo_y, v.y.ToDouble());
    hi_x = std::max(hi_x, v.x.ToDouble());
    hi_y = std::max(hi_y, v.y.ToDouble());
  }
  const double h = 1.0 / static_cast<double>(cells_per_unit);
  const long x0 = static_cast<long>(std::floor(lo_x / h));
  const long y0 = static_cast<long>(std::floor(lo_y / h));
  const long x1 = static_cast<long>(std::ceil(hi_x / h));
  const long y1 = static_cast<long>(std::ceil(hi_y / h));
  long count = 0;
  for (long ix = x0; ix < x1; ++ix) {
    for (long iy = y0; iy < y1; ++iy) {
      const double x = (static_cast<double>(ix) + 0.5) * h;
      const double y = (static_cast<double>(iy) + 0.5) * h;
      if (InsideConvex(p, x, y) && InsideConvex(q, x, y)) ++count;
    }
  }
  const double k = static_cast<double>(cells_per_unit);
  const double boundary_cells =
      2.0 * std::sqrt(2.0) * k * (Perimeter(p) + Perimeter(q)) +
      4.0 * static_cast<double>(p.size() + q.size());
  return {static_cast<double>(count) * h * h, boundary_cells * h * h};
}

}  // namespace toricpack::oracle
