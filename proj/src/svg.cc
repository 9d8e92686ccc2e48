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

#include "toricpack/svg.h"

#include <algorithm>
#include <sstream>
#include <vector>

#include "toricpack/errors.h"
#include "toricpack/geometry.h"
#include "toricpack/packing.h"

namespace toricpack {
namespace {

struct Frame {
  Rational min_x;
  Rational max_y;

  Point ToCanvas(const Point& p) const {
    return {Rational(kSvgMarginPx) + Rational(kSvgUnitPx) * (p.x - min_x),
            Rational(kSvgMarginPx) + Rational(kSvgUnitPx) * (max_y - p.y)};
  }
};

std::string PointList(const Frame& frame, std::span<const Point> ring) {
  const auto first = std::min_element(ring.begin(), ring.end());
  const std::size_t offset = static_cast<std::size_t>(first - ring.begin());
  std::string out;
  for (std::size_t k = 0; k < ring.size(); ++k) {
    const Point c = frame.ToCanvas(ring[(offset + k) % ring.size()]);
    if (k > 0) out += ' ';
    out += FormatFixed(c.x) + "," + FormatFixed(c.y);
  }
  return out;
}

}  // namespace

std::string FormatFixed(const Rational& value, int digits) {
  BigInt scale = 1;
  for (int i = 0; i < digits; ++i) scale *= 10;
  const Rational scaled = Abs(value) * Rational(scale);
  // floor(|x| * 10^d + 1/2)
  const Rational shifted = scaled + Rational(BigInt(1), BigInt(2));
  BigInt units;
  mpz_fdiv_q(units.get_mpz_t(), shifted.numerator().get_mpz_t(),
             shifted.denominator().get_mpz_t());
  const BigInt whole = units / scale;
  const BigInt frac = units % scale;
  std::string out = whole.get_str();
  if (frac != 0) {
    std::string tail = frac.get_str();
    tail.insert(0, static_cast<std::size_t>(digits) - tail.size(), '0');
    while (!tail.empty() && tail.back() == '0') tail.pop_back();
    out += "." + tail;
  }
  if (value.sign() < 0 && units != 0) out.insert(0, "-");
  return out;
}

std::string RenderSvg(const DelzantPolygon& polygon,
                      std::span<const Rational> radii) {
  if (!radii.empty() && !IsAdmissiblePacking(polygon, radii)) {
    throw PreconditionError("cannot render an inadmissible packing");
  }
  const auto vertices = polygon.vertices();
  Rational min_x = vertices[0].x, max_x = vertices[0].x;
  Rational min_y = vertices[0].y, max_y = vertices[0].y;
  for (const Point& p : vertices) {
    min_x = Min(min_x, p.x);
    max_x = Max(max_x, p.x);
    min_y = Min(min_y, p.y);
    max_y = Max(max_y, p.y);
  }
  const Frame frame{min_x, max_y};
  const Rational width =
      Rational(2 * kSvgMarginPx) + Rational(kSvgUnitPx) * (max_x - min_x);
  const Rational height =
      Rational(2 * kSvgMarginPx) + Rational(kSvgUnitPx) * (max_y - min_y);

  std::ostringstream os;
  os << "<?xml version=\"1.0\" encoding=\"UTF-8\" standalone=\"no\"?>\n"
     << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\""
     << FormatFixed(width) << "\" height=\"" << FormatFixed(height)
     << "\" viewBox=\"0 0 " << FormatFixed(width) << " "
     << FormatFixed(height) << "\">\n";
  os << "  <polygon class=\"delzant\" points=\"" << PointList(frame, vertices)
     << "\" fill=\"#ffffff\" stroke=\"none\"/>\n";
  for (std::size_t i = 0; i < radii.size(); ++i) {
    if (radii[i].sign() == 0) continue;
    const AdmissibleSimplex simplex = SimplexAt(polygon, i, radii[i]);
    os << "  <polygon class=\"simplex\" data-vertex=\"" << i
       << "\" data-radius=\"" << radii[i].ToString() << "\" points=\""
       << PointList(frame, simplex.triangle.vertices())
       << "\" fill=\"#9ecae1\" stroke=\"#3182bd\" stroke-width=\"1\"/>\n";
  }
  os << "  <polygon class=\"outline\" points=\"" << PointList(frame, vertices)
     << "\" fill=\"none\" stroke=\"#000000\" stroke-width=\"2\"/>\n";
  os << "</svg>\n";
  return os.str();
}

}  // namespace toricpack
