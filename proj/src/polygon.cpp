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

#include "depthcut/polygon.hpp"

#include <algorithm>

namespace depthcut {

namespace {

Point2 Interpolate(const Point2& a, const Point2& b, const Rational& ha, const Rational& hb) {
  const Rational t = ha / (ha - hb);
  return {a.x + t * (b.x - a.x), a.y + t * (b.y - a.y)};
}

// Removes consecutive duplicates, including a trailing copy of the first point.
void DedupeCyclic(std::vector<Point2>& pts) {
  std::vector<Point2> out;
  out.reserve(pts.size());
  for (auto& p : pts)
    if (out.empty() || !(out.back() == p)) out.push_back(std::move(p));
  while (out.size() > 1 && out.back() == out.front()) out.pop_back();
  pts = std::move(out);
}

// Closed Sutherland-Hodgman step; works for degenerate (segment/point) input.
std::vector<Point2> ClipClosed(const std::vector<Point2>& poly, const HalfPlane& h) {
  const std::size_t n = poly.size();
  std::vector<Rational> val(n);
  bool any_out = false, any_in = false;
  for (std::size_t i = 0; i < n; ++i) {
    val[i] = h.Eval(poly[i]);
    if (sgn(val[i]) < 0) any_out = true;
    else any_in = true;
  }
  if (!any_out) return poly;
  if (!any_in) return {};
  std::vector<Point2> out;
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t j = (i + 1) % n;
    const int si = sgn(val[i]), sj = sgn(val[j]);
    if (si >= 0) out.push_back(poly[i]);
    if ((si > 0 && sj < 0) || (si < 0 && sj > 0)) out.push_back(Interpolate(poly[i], poly[j], val[i], val[j]));
  }
  DedupeCyclic(out);
  return out;
}

// Half-planes whose intersection is the closed convex hull of `poly`;
// nullopt if poly is a single point.
std::optional<std::vector<HalfPlane>> HalfPlanesOf(std::vector<Point2> poly) {
  DedupeCyclic(poly);
  if (poly.size() <= 1) return std::nullopt;
  const Rational area = poly.size() >= 3 ? TwiceSignedArea(poly) : Rational(0);
  std::vector<HalfPlane> hs;
  if (area != 0) {
    if (area < 0) std::reverse(poly.begin(), poly.end());
    for (std::size_t i = 0; i < poly.size(); ++i)
      hs.push_back(HalfPlane::LeftOf(poly[i], poly[(i + 1) % poly.size()]));
    return hs;
  }
  // Collinear: the segment between the lexicographic extremes.
  const auto [lo, hi] = std::minmax_element(poly.begin(), poly.end(), LexLess);
  const Point2 p = *lo, q = *hi;
  hs.push_back(HalfPlane::LeftOf(p, q));
  hs.push_back(HalfPlane::LeftOf(q, p));
  const Rational dx = q.x - p.x, dy = q.y - p.y;
  hs.push_back({dx, dy, -(dx * p.x + dy * p.y)});
  hs.push_back({-dx, -dy, dx * q.x + dy * q.y});
  return hs;
}

}  // namespace

int HalfPlane::Side(const Point2& p) const { return sgn(Eval(p)); }

HalfPlane HalfPlane::LeftOf(const Point2& p, const Point2& q) {
  HalfPlane h{p.y - q.y, q.x - p.x, 0};
  h.c = -(h.a * p.x + h.b * p.y);
  return h;
}

HalfPlane HalfPlane::SideOf(const Line2& line, const Point2& inside) {
  HalfPlane h{line.a, line.b, -line.c};
  const int s = h.Side(inside);
  if (s == 0) throw GeometryError("reference point lies on the line");
  return s > 0 ? h : h.Flipped();
}

Cell2 Cell2::FromPolygon(std::vector<Point2> ccw) {
  Cell2 cell;
  if (TwiceSignedArea(ccw) < 0) std::reverse(ccw.begin(), ccw.end());
  for (std::size_t i = 0; i < ccw.size(); ++i)
    cell.sides.push_back(HalfPlane::LeftOf(ccw[i], ccw[(i + 1) % ccw.size()]));
  cell.boundary = std::move(ccw);
  return cell;
}

Cell2 Cell2::Box(const Rational& x0, const Rational& y0, const Rational& x1, const Rational& y1) {
  Cell2 cell;
  cell.boundary = {{x0, y0}, {x1, y0}, {x1, y1}, {x0, y1}};
  cell.sides = {{0, 1, -y0}, {-1, 0, x1}, {0, -1, y1}, {1, 0, -x0}};
  return cell;
}

bool Cell2::ContainsStrictly(const Point2& p) const {
  return std::all_of(sides.begin(), sides.end(), [&](const HalfPlane& h) { return h.Side(p) > 0; });
}

bool Cell2::ContainsClosed(const Point2& p) const {
  return std::all_of(sides.begin(), sides.end(), [&](const HalfPlane& h) { return h.Side(p) >= 0; });
}

std::optional<ConvexFragment> ClipHalfPlane(const ConvexFragment& f, const HalfPlane& h, EdgeKind new_edge) {
  const std::size_t n = f.size();
  std::vector<Rational> val(n);
  std::vector<int> s(n);
  bool any_pos = false, any_neg = false;
  for (std::size_t i = 0; i < n; ++i) {
    val[i] = h.Eval(f.boundary[i]);
    s[i] = sgn(val[i]);
    any_pos |= s[i] > 0;
    any_neg |= s[i] < 0;
  }
  if (!any_neg) return f;
  if (!any_pos) return std::nullopt;
  ConvexFragment out;
  out.plane = f.plane;
  out.parent_id = f.parent_id;
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t j = (i + 1) % n;
    if (s[i] > 0 || (s[i] == 0 && s[j] >= 0)) {
      out.boundary.push_back(f.boundary[i]);
      out.edges.push_back(f.edges[i]);
    } else if (s[i] == 0) {
      out.boundary.push_back(f.boundary[i]);
      out.edges.push_back(new_edge);
    }
    if (s[i] > 0 && s[j] < 0) {
      out.boundary.push_back(Interpolate(f.boundary[i], f.boundary[j], val[i], val[j]));
      out.edges.push_back(new_edge);
    } else if (s[i] < 0 && s[j] > 0) {
      out.boundary.push_back(Interpolate(f.boundary[i], f.boundary[j], val[i], val[j]));
      out.edges.push_back(f.edges[i]);
    }
  }
  return out;
}

std::optional<ConvexFragment> ClipToCell(const ConvexFragment& f, const Cell2& cell) {
  std::optional<ConvexFragment> cur = f;
  for (const auto& h : cell.sides) {
    cur = ClipHalfPlane(*cur, h);
    if (!cur) return std::nullopt;
  }
  return cur;
}

std::optional<ConvexFragment> ClipToCell(const Triangle3& t, const Cell2& cell) {
  return ClipToCell(ConvexFragment::FromTriangle(t), cell);
}

std::vector<ConvexFragment> SliceByVerticalPlane(const ConvexFragment& f, const Rational& c) {
  auto left = ClipHalfPlane(f, HalfPlane::XAtMost(c));
  auto right = ClipHalfPlane(f, HalfPlane::XAtLeast(c));
  if (!left || !right) return {f};
  return {std::move(*left), std::move(*right)};
}

std::vector<ConvexFragment> SliceByVerticalPlane(const ConvexFragment& f, const Point2& p, const Point2& q) {
  const HalfPlane h = HalfPlane::LeftOf(p, q);
  auto left = ClipHalfPlane(f, h);
  auto right = ClipHalfPlane(f, h.Flipped());
  if (!left || !right) return {f};
  return {std::move(*left), std::move(*right)};
}

std::vector<Point2> IntersectConvex(const std::vector<Point2>& a, const std::vector<Point2>& b) {
  if (a.empty() || b.empty()) return {};
  auto hs = HalfPlanesOf(b);
  if (!hs) {
    // b is a single point: test it against a instead.
    auto ha = HalfPlanesOf(a);
    if (!ha) return a.front() == b.front() ? std::vector<Point2>{b.front()} : std::vector<Point2>{};
    for (const auto& h : *ha)
      if (h.Side(b.front()) < 0) return {};
    return {b.front()};
  }
  std::vector<Point2> cur = a;
  DedupeCyclic(cur);
  for (const auto& h : *hs) {
    cur = ClipClosed(cur, h);
    if (cur.empty()) return cur;
  }
  return cur;
}

std::vector<ConvexFragment> FanTriangulate(const ConvexFragment& f) {
  const std::size_t n = f.size();
  if (n <= 3) return {f};
  std::vector<ConvexFragment> out;
  for (std::size_t i = 1; i + 1 < n; ++i) {
    ConvexFragment t;
    t.plane = f.plane;
    t.parent_id = f.parent_id;
    t.boundary = {f.boundary[0], f.boundary[i], f.boundary[i + 1]};
    t.edges = {i == 1 ? f.edges[0] : EdgeKind::kCut, f.edges[i], i + 2 == n ? f.edges[n - 1] : EdgeKind::kCut};
    out.push_back(std::move(t));
  }
  return out;
}

}  // namespace depthcut
