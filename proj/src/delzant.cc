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

#include "toricpack/delzant.h"

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>

#include "toricpack/errors.h"

namespace toricpack {
namespace {

void CheckIndex(std::size_t index, std::size_t size, const char* what) {
  if (index >= size) {
    throw PreconditionError(std::string(what) + " index " +
                            std::to_string(index) + " out of range [0, " +
                            std::to_string(size) + ")");
  }
}

void RequirePositive(const Rational& value, const char* name) {
  if (value.sign() <= 0) {
    throw PreconditionError(std::string(name) + " must be positive, got " +
                            value.ToString());
  }
}

Point Direction(const IntVec& v) { return v.ToPoint(); }

}  // namespace

const DelzantEdge& DelzantPolygon::edge(std::size_t i) const {
  CheckIndex(i, edges_.size(), "edge");
  return edges_[i];
}

const DelzantCorner& DelzantPolygon::corner(std::size_t i) const {
  CheckIndex(i, corners_.size(), "vertex");
  return corners_[i];
}

std::string Violation::Describe() const {
  std::ostringstream os;
  os << "vertex " << vertex << " at " << at << " is not smooth: |det("
     << corner.next << ", " << corner.prev << ")| = " << determinant.get_str();
  return os.str();
}

DelzantValidation Validate(const ConvexPolygon& polygon) {
  const std::size_t n = polygon.size();
  std::vector<DelzantEdge> edges;
  edges.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    auto [direction, length] = PrimitiveDecompose(polygon.edge(i));
    edges.push_back({std::move(direction), std::move(length)});
  }

  std::vector<DelzantCorner> corners;
  corners.reserve(n);
  DelzantValidation result;
  for (std::size_t i = 0; i < n; ++i) {
    DelzantCorner corner{edges[i].direction, -edges[(i + n - 1) % n].direction};
    BigInt det = Det(corner.next, corner.prev);
    if (det < 0) det = -det;
    if (det != 1) {
      result.violations.push_back({i, polygon.vertex(i), corner, det});
    }
    corners.push_back(std::move(corner));
  }
  if (result.violations.empty()) {
    result.polygon =
        DelzantPolygon(polygon, std::move(edges), std::move(corners));
  }
  return result;
}

DelzantPolygon Certify(const ConvexPolygon& polygon) {
  DelzantValidation result = Validate(polygon);
  if (!result.ok()) {
    std::string message = "not a Delzant polygon:";
    for (const Violation& v : result.violations) {
      message += " " + v.Describe() + ";";
    }
    throw DomainError(message);
  }
  return *std::move(result.polygon);
}

DelzantPolygon Certify(std::vector<Point> vertices) {
  return Certify(ConvexPolygon(std::move(vertices)));
}

Rational EdgeRationalLength(const DelzantPolygon& polygon, std::size_t edge) {
  return polygon.edge(edge).length;
}

Rational VertexRadius(const DelzantPolygon& polygon, std::size_t vertex) {
  CheckIndex(vertex, polygon.size(), "vertex");
  const std::size_t n = polygon.size();
  return Min(polygon.edge(vertex).length,
             polygon.edge((vertex + n - 1) % n).length);
}

DelzantPolygon StandardSimplex(const Rational& size) {
  RequirePositive(size, "simplex size");
  return Certify({{0, 0}, {size, 0}, {0, size}});
}

DelzantPolygon Rectangle(const Rational& width, const Rational& height) {
  RequirePositive(width, "rectangle width");
  RequirePositive(height, "rectangle height");
  return Certify({{0, 0}, {width, 0}, {width, height}, {0, height}});
}

DelzantPolygon Hirzebruch(long k, const Rational& a, const Rational& b) {
  if (k < 0) {
    throw PreconditionError("Hirzebruch twist must be non-negative, got " +
                            std::to_string(k));
  }
  RequirePositive(a, "Hirzebruch top length");
  RequirePositive(b, "Hirzebruch height");
  return Certify({{0, 0}, {a + Rational(k) * b, 0}, {a, b}, {0, b}});
}

Point IntMatrix2::Apply(const Point& p) const {
  return {Rational(m00) * p.x + Rational(m01) * p.y,
          Rational(m10) * p.x + Rational(m11) * p.y};
}

DelzantPolygon ApplyAgl(const DelzantPolygon& polygon, const IntMatrix2& a,
                        const Point& c) {
  const BigInt det = a.determinant();
  if (det != 1 && det != -1) {
    throw PreconditionError("linear part is not unimodular, det = " +
                            det.get_str());
  }
  std::vector<Point> image;
  image.reserve(polygon.size());
  for (const Point& v : polygon.vertices()) image.push_back(a.Apply(v) + c);
  if (det < 0) std::reverse(image.begin() + 1, image.end());
  return Certify(std::move(image));
}

DelzantPolygon Chop(const DelzantPolygon& polygon, std::size_t vertex,
                    const Rational& scale) {
  const Rational limit = VertexRadius(polygon, vertex);
  if (scale.sign() <= 0 || scale >= limit) {
    throw PreconditionError("chop scale " + scale.ToString() +
                            " must lie in (0, " + limit.ToString() + ")");
  }
  const DelzantCorner& corner = polygon.corner(vertex);
  const Point& v = polygon.vertex(vertex);
  std::vector<Point> out;
  out.reserve(polygon.size() + 1);
  for (std::size_t i = 0; i < polygon.size(); ++i) {
    if (i == vertex) {
      out.push_back(v + scale * Direction(corner.prev));
      out.push_back(v + scale * Direction(corner.next));
    } else {
      out.push_back(polygon.vertex(i));
    }
  }
  DelzantValidation result = Validate(ConvexPolygon(std::move(out)));
  if (!result.ok()) {
    throw std::logic_error("chop produced a non-Delzant polygon");
  }
  return *std::move(result.polygon);
}

SupportForm ToSupportForm(const DelzantPolygon& polygon) {
  SupportForm form;
  for (std::size_t j = 0; j < polygon.size(); ++j) {
    const IntVec& u = polygon.edge(j).direction;
    IntVec normal{u.b, -u.a};
    form.offsets.push_back(Dot(polygon.vertex(j), normal.ToPoint()));
    form.normals.push_back(std::move(normal));
  }
  return form;
}

DelzantPolygon FromSupportForm(const SupportForm& form) {
  const std::size_t n = form.normals.size();
  if (n < 3 || form.offsets.size() != n) {
    throw PreconditionError("support form needs matching normals and offsets, "
                            "at least 3 sides");
  }
  std::vector<Point> vertices;
  vertices.reserve(n);
  for (std::size_t j = 0; j < n; ++j) {
    const IntVec& n1 = form.normals[(j + n - 1) % n];
    const IntVec& n2 = form.normals[j];
    const Rational& c1 = form.offsets[(j + n - 1) % n];
    const Rational& c2 = form.offsets[j];
    const Rational det(Det(n1, n2));
    if (det.sign() == 0) {
      throw PreconditionError("adjacent sides " + std::to_string(j) +
                              " are parallel");
    }
    vertices.push_back({(c1 * Rational(n2.b) - c2 * Rational(n1.b)) / det,
                        (Rational(n1.a) * c2 - Rational(n2.a) * c1) / det});
  }
  for (std::size_t j = 0; j < n; ++j) {
    const Point edge = vertices[(j + 1) % n] - vertices[j];
    const Point along{Rational(-form.normals[j].b), Rational(form.normals[j].a)};
    if (Cross(edge, along).sign() != 0 || Dot(edge, along).sign() <= 0) {
      throw PreconditionError("side " + std::to_string(j) +
                              " no longer bounds a positive-length edge");
    }
  }
  try {
    return Certify(std::move(vertices));
  } catch (const DomainError& e) {
    throw PreconditionError(std::string("support form does not describe a "
                                        "Delzant polygon: ") + e.what());
  }
}

DelzantPolygon PerturbSupport(const DelzantPolygon& polygon, std::size_t side,
                              const Rational& delta) {
  CheckIndex(side, polygon.size(), "side");
  SupportForm form = ToSupportForm(polygon);
  form.offsets[side] += delta;
  return FromSupportForm(form);
}

}  // namespace toricpack
