// Copyright 2026 The depthcut Authors.
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

#include <optional>
#include <vector>

#include "depthcut/geometry.hpp"

namespace depthcut {

/// Closed half-plane a*x + b*y + c >= 0.
struct HalfPlane {
  Rational a, b, c;

  Rational Eval(const Point2& p) const { return a * p.x + b * p.y + c; }
  int Side(const Point2& p) const;

  /// Points on or to the left of the directed line p -> q.
  static HalfPlane LeftOf(const Point2& p, const Point2& q);
  static HalfPlane XAtLeast(const Rational& x) { return {1, 0, -x}; }
  static HalfPlane XAtMost(const Rational& x) { return {-1, 0, x}; }
  /// The side of `line` that contains `inside` (which must not lie on it).
  static HalfPlane SideOf(const Line2& line, const Point2& inside);
  HalfPlane Flipped() const { return {-a, -b, -c}; }
};

/// Bounded convex planar cell: counter-clockwise boundary plus the supporting
/// half-plane of each edge (sides[i] supports boundary[i] -> boundary[i+1]).
struct Cell2 {
  std::vector<Point2> boundary;
  std::vector<HalfPlane> sides;

  static Cell2 FromPolygon(std::vector<Point2> ccw);
  static Cell2 Box(const Rational& x0, const Rational& y0, const Rational& x1, const Rational& y1);
  Rational TwiceArea() const { return TwiceSignedArea(boundary); }
  /// Strictly inside (not on the boundary).
  bool ContainsStrictly(const Point2& p) const;
  bool ContainsClosed(const Point2& p) const;
};

/// Portion of f on the closed side of h. New boundary along h gets
/// `new_edge`; edges of f lying on h keep their own kind. Returns nullopt when
/// the result has empty interior.
std::optional<ConvexFragment> ClipHalfPlane(const ConvexFragment& f, const HalfPlane& h,
                                            EdgeKind new_edge = EdgeKind::kCut);

/// The part of f projecting into the cell; nullopt if that part has empty
/// interior. Boundary introduced by the cell is marked as cut.
std::optional<ConvexFragment> ClipToCell(const ConvexFragment& f, const Cell2& cell);
std::optional<ConvexFragment> ClipToCell(const Triangle3& t, const Cell2& cell);

/// Splits f by the vertical plane x = c. Returns f unchanged when the plane
/// misses its interior, otherwise the two parts (x <= c first).
std::vector<ConvexFragment> SliceByVerticalPlane(const ConvexFragment& f, const Rational& c);

/// Splits f by the vertical plane through the projected points p and q.
std::vector<ConvexFragment> SliceByVerticalPlane(const ConvexFragment& f, const Point2& p, const Point2& q);

/// Closed-polygon intersection of two convex polygons (either may be a
/// segment or a point). Result is a convex polygon, segment, point or empty.
std::vector<Point2> IntersectConvex(const std::vector<Point2>& a, const std::vector<Point2>& b);

/// Fan triangulation from vertex 0. Fan diagonals become cut (open) edges.
std::vector<ConvexFragment> FanTriangulate(const ConvexFragment& f);

}  // namespace depthcut
