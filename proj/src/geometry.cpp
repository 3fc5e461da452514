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

#include "depthcut/geometry.hpp"

#include <algorithm>
#include <utility>

namespace depthcut {

std::string ToString(const Point2& p) {
  return "(" + FormatRational(p.x) + ", " + FormatRational(p.y) + ")";
}

std::string ToString(const Point3& p) {
  return "(" + FormatRational(p.x) + ", " + FormatRational(p.y) + ", " + FormatRational(p.z) + ")";
}

Line2 Line2::Through(const Point2& p, const Point2& q) {
  Line2 l{p.y - q.y, q.x - p.x, 0};
  l.c = l.a * p.x + l.b * p.y;
  if (l.a == 0 && l.b == 0) throw GeometryError("line through coincident points " + ToString(p));
  l.Normalize();
  return l;
}

void Line2::Normalize() {
  const Rational lead = a != 0 ? a : b;
  if (lead == 1) return;
  a /= lead;
  b /= lead;
  c /= lead;
}

bool operator<(const Line2& l, const Line2& m) {
  if (l.a != m.a) return l.a < m.a;
  if (l.b != m.b) return l.b < m.b;
  return l.c < m.c;
}

HeightPlane HeightPlane::Through(const Point3& p, const Point3& q, const Point3& r) {
  const Rational ux = q.x - p.x, uy = q.y - p.y, uz = q.z - p.z;
  const Rational vx = r.x - p.x, vy = r.y - p.y, vz = r.z - p.z;
  const Rational nx = uy * vz - uz * vy;
  const Rational ny = uz * vx - ux * vz;
  const Rational nz = ux * vy - uy * vx;
  if (nz == 0) throw GeometryError("vertical or degenerate plane through " + ToString(p));
  HeightPlane h;
  h.a = -nx / nz;
  h.b = -ny / nz;
  h.c = p.z - h.a * p.x - h.b * p.y;
  return h;
}

Point3 Segment3::At(const Rational& t) const {
  return {a.x + t * (b.x - a.x), a.y + t * (b.y - a.y), a.z + t * (b.z - a.z)};
}

Rational Segment3::ParamOf(const Point2& p) const {
  if (a.x != b.x) return (p.x - a.x) / (b.x - a.x);
  return (p.y - a.y) / (b.y - a.y);
}

std::vector<Point3> ConvexFragment::Boundary3() const {
  std::vector<Point3> out;
  out.reserve(boundary.size());
  for (std::size_t i = 0; i < boundary.size(); ++i) out.push_back(Vertex3(i));
  return out;
}

ConvexFragment ConvexFragment::FromTriangle(const Triangle3& t) {
  ConvexFragment f;
  f.plane = HeightPlane::Through(t.a, t.b, t.c);
  f.boundary = ProjectTriangle(t);
  if (Orient2d(f.boundary[0], f.boundary[1], f.boundary[2]) < 0) std::swap(f.boundary[1], f.boundary[2]);
  f.edges.assign(3, EdgeKind::kOriginal);
  f.parent_id = t.id;
  return f;
}

int Orient2d(const Point2& p, const Point2& q, const Point2& r) {
  return sgn((q.x - p.x) * (r.y - p.y) - (q.y - p.y) * (r.x - p.x));
}

bool OnSegment(const Point2& p, const Segment2& s) {
  if (Orient2d(s.a, s.b, p) != 0) return false;
  const auto& [lo_x, hi_x] = std::minmax(s.a.x, s.b.x);
  const auto& [lo_y, hi_y] = std::minmax(s.a.y, s.b.y);
  return lo_x <= p.x && p.x <= hi_x && lo_y <= p.y && p.y <= hi_y;
}

SegmentIntersection2 SegmentsIntersect2d(const Segment2& s, const Segment2& t) {
  using Kind = SegmentIntersection2::Kind;
  const int d1 = Orient2d(t.a, t.b, s.a);
  const int d2 = Orient2d(t.a, t.b, s.b);
  const int d3 = Orient2d(s.a, s.b, t.a);
  const int d4 = Orient2d(s.a, s.b, t.b);
  SegmentIntersection2 out;
  if (d1 == 0 && d2 == 0 && d3 == 0 && d4 == 0) {
    // Collinear (or degenerate): intersect the lexicographic ranges.
    auto [s_lo, s_hi] = LexLess(s.b, s.a) ? std::pair(s.b, s.a) : std::pair(s.a, s.b);
    auto [t_lo, t_hi] = LexLess(t.b, t.a) ? std::pair(t.b, t.a) : std::pair(t.a, t.b);
    const Point2& lo = LexLess(s_lo, t_lo) ? t_lo : s_lo;
    const Point2& hi = LexLess(s_hi, t_hi) ? s_hi : t_hi;
    if (LexLess(hi, lo)) return out;
    if (lo == hi) {
      out.kind = Kind::kPoint;
      out.p = lo;
      return out;
    }
    out.kind = Kind::kOverlap;
    out.p = lo;
    out.q = hi;
    return out;
  }
  if (d1 * d2 < 0 && d3 * d4 < 0) {
    const Rational rx = s.b.x - s.a.x, ry = s.b.y - s.a.y;
    const Rational ux = t.b.x - t.a.x, uy = t.b.y - t.a.y;
    const Rational denom = rx * uy - ry * ux;
    const Rational num = (t.a.x - s.a.x) * uy - (t.a.y - s.a.y) * ux;
    const Rational param = num / denom;
    out.kind = Kind::kPoint;
    out.p = {s.a.x + param * rx, s.a.y + param * ry};
    return out;
  }
  // Touching configurations: some endpoint lies on the other segment.
  for (const auto& [pt, seg] : {std::pair(&s.a, &t), std::pair(&s.b, &t), std::pair(&t.a, &s), std::pair(&t.b, &s)}) {
    if (OnSegment(*pt, *seg)) {
      out.kind = Kind::kPoint;
      out.p = *pt;
      return out;
    }
  }
  return out;
}

Rational TwiceSignedArea(const std::vector<Point2>& poly) {
  Rational sum = 0;
  const std::size_t n = poly.size();
  for (std::size_t i = 0; i < n; ++i) {
    const Point2& p = poly[i];
    const Point2& q = poly[(i + 1) % n];
    sum += p.x * q.y - q.x * p.y;
  }
  return sum;
}

Point2 Centroid(const std::vector<Point2>& poly) {
  const std::size_t n = poly.size();
  if (n == 0) throw GeometryError("centroid of empty polygon");
  const Rational twice_area = n >= 3 ? TwiceSignedArea(poly) : Rational(0);
  if (twice_area == 0) {
    Point2 avg{0, 0};
    for (const auto& p : poly) {
      avg.x += p.x;
      avg.y += p.y;
    }
    avg.x /= static_cast<long>(n);
    avg.y /= static_cast<long>(n);
    return avg;
  }
  Rational cx = 0, cy = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const Point2& p = poly[i];
    const Point2& q = poly[(i + 1) % n];
    const Rational cross = p.x * q.y - q.x * p.y;
    cx += (p.x + q.x) * cross;
    cy += (p.y + q.y) * cross;
  }
  const Rational six_area = 3 * twice_area;
  return {cx / six_area, cy / six_area};
}

Segment2 ProjectSegment(const Segment3& s) { return s.Projected(); }

std::vector<Point2> ProjectTriangle(const Triangle3& t) {
  return {Project(t.a), Project(t.b), Project(t.c)};
}

std::vector<Point2> ProjectFragment(const ConvexFragment& f) { return f.boundary; }

void ValidateTriangle(const Triangle3& t) {
  if (Orient2d(Project(t.a), Project(t.b), Project(t.c)) == 0)
    throw GeometryError("triangle " + std::to_string(t.id) + " is vertical or degenerate");
}

void ValidateSegment(const Segment3& s) {
  if (s.a.x == s.b.x && s.a.y == s.b.y)
    throw GeometryError("segment " + ToString(s.a) + "-" + ToString(s.b) + " is vertical or degenerate");
}

}  // namespace depthcut
