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

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "depthcut/rational.hpp"

namespace depthcut {

class GeometryError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct Point2 {
  Rational x, y;
  friend bool operator==(const Point2& p, const Point2& q) { return p.x == q.x && p.y == q.y; }
};

struct Point3 {
  Rational x, y, z;
  friend bool operator==(const Point3& p, const Point3& q) {
    return p.x == q.x && p.y == q.y && p.z == q.z;
  }
};

/// Lexicographic (x, then y) order; the sweep order used throughout.
inline bool LexLess(const Point2& p, const Point2& q) {
  return p.x < q.x || (p.x == q.x && p.y < q.y);
}

inline Point2 Project(const Point3& p) { return {p.x, p.y}; }

std::string ToString(const Point2& p);
std::string ToString(const Point3& p);

/// Line a*x + b*y = c. Normalized so the first nonzero of (a, b) is 1, which
/// makes equal lines compare equal.
struct Line2 {
  Rational a, b, c;

  static Line2 Through(const Point2& p, const Point2& q);
  static Line2 Vertical(const Rational& x) { return {1, 0, x}; }
  static Line2 Horizontal(const Rational& y) { return {0, 1, y}; }

  bool IsVertical() const { return b == 0; }
  /// a*x + b*y - c.
  Rational Eval(const Point2& p) const { return a * p.x + b * p.y - c; }
  /// Height of a non-vertical line above x.
  Rational YAt(const Rational& x) const { return (c - a * x) / b; }
  void Normalize();

  friend bool operator==(const Line2& l, const Line2& m) {
    return l.a == m.a && l.b == m.b && l.c == m.c;
  }
  friend bool operator<(const Line2& l, const Line2& m);
};

/// Non-vertical plane z = a*x + b*y + c.
struct HeightPlane {
  Rational a, b, c;

  /// Throws GeometryError if the three points project onto a line.
  static HeightPlane Through(const Point3& p, const Point3& q, const Point3& r);
  Rational ZAt(const Rational& x, const Rational& y) const { return a * x + b * y + c; }
  Rational ZAt(const Point2& p) const { return ZAt(p.x, p.y); }
};

struct Segment2 {
  Point2 a, b;
};

/// Non-vertical segment; an open endpoint does not belong to the segment.
struct Segment3 {
  Point3 a, b;
  bool open_a = false;
  bool open_b = false;

  Point3 At(const Rational& t) const;
  Segment2 Projected() const { return {Project(a), Project(b)}; }
  /// Parameter t with Project(At(t)) == p, for p on the projected segment.
  Rational ParamOf(const Point2& p) const;
  /// z above the projected point p, which must lie on the projected segment.
  Rational ZAbove(const Point2& p) const { return At(ParamOf(p)).z; }
};

struct Triangle3 {
  Point3 a, b, c;
  int id = 0;

  Point3 Vertex(int i) const { return i == 0 ? a : (i == 1 ? b : c); }
};

enum class EdgeKind : std::uint8_t { kOriginal, kCut };

/// Convex planar piece of a parent triangle. Boundary vertices are stored
/// projected and counter-clockwise; z comes from the parent's plane. Edge i
/// runs from vertex i to vertex i+1; cut edges are open, original edges closed.
struct ConvexFragment {
  std::vector<Point2> boundary;
  std::vector<EdgeKind> edges;
  HeightPlane plane;
  int parent_id = 0;

  std::size_t size() const { return boundary.size(); }
  Point3 Vertex3(std::size_t i) const {
    return {boundary[i].x, boundary[i].y, plane.ZAt(boundary[i])};
  }
  std::vector<Point3> Boundary3() const;

  static ConvexFragment FromTriangle(const Triangle3& t);
};

// Planar predicates -------------------------------------------------------

/// Sign of the signed area of (p, q, r): +1 counter-clockwise, 0 collinear.
int Orient2d(const Point2& p, const Point2& q, const Point2& r);

struct SegmentIntersection2 {
  enum class Kind { kEmpty, kPoint, kOverlap };
  Kind kind = Kind::kEmpty;
  Point2 p;  // the point, or the first overlap endpoint (lexicographically)
  Point2 q;  // the second overlap endpoint
};

/// Exact classification of two closed planar segments.
SegmentIntersection2 SegmentsIntersect2d(const Segment2& s, const Segment2& t);

/// True when p lies on the closed segment s (s may be degenerate).
bool OnSegment(const Point2& p, const Segment2& s);

/// Twice the signed area of a polygon.
Rational TwiceSignedArea(const std::vector<Point2>& poly);

/// Area-weighted centroid; for degenerate input, the vertex average.
Point2 Centroid(const std::vector<Point2>& poly);

// Projections -------------------------------------------------------------

Segment2 ProjectSegment(const Segment3& s);
std::vector<Point2> ProjectTriangle(const Triangle3& t);
std::vector<Point2> ProjectFragment(const ConvexFragment& f);

// Validation --------------------------------------------------------------

/// Throws GeometryError unless the triangle has positive projected area.
void ValidateTriangle(const Triangle3& t);
/// Throws GeometryError unless the segment is non-degenerate and non-vertical.
void ValidateSegment(const Segment3& s);

}  // namespace depthcut
