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

#include "depthcut/relation.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "depthcut/polygon.hpp"

namespace depthcut {

namespace {

BBox2 BoundsOf(const std::vector<Point2>& pts) {
  constexpr double kInf = std::numeric_limits<double>::infinity();
  BBox2 b{kInf, kInf, -kInf, -kInf};
  for (const auto& p : pts) {
    const double x = p.x.get_d(), y = p.y.get_d();
    b.x0 = std::min(b.x0, std::nextafter(x, -kInf));
    b.y0 = std::min(b.y0, std::nextafter(y, -kInf));
    b.x1 = std::max(b.x1, std::nextafter(x, kInf));
    b.y1 = std::max(b.y1, std::nextafter(y, kInf));
  }
  return b;
}

Point2 Midpoint(const Point2& p, const Point2& q) { return {(p.x + q.x) / 2, (p.y + q.y) / 2}; }

bool InBoth(const DepthObject& a, const DepthObject& b, const Point2& p) {
  return a.Contains(p) && b.Contains(p);
}

// Points of a convex set S worth probing: for a set with area its centroid
// (interior), otherwise its endpoints and midpoint. Membership in the
// relatively open pieces of S is uniform, so these probes are exhaustive.
std::vector<Point2> Probes(const std::vector<Point2>& s) {
  if (s.size() >= 3 && TwiceSignedArea(s) != 0) return {Centroid(s)};
  if (s.size() == 1) return s;
  const auto [lo, hi] = std::minmax_element(s.begin(), s.end(), LexLess);
  return {Midpoint(*lo, *hi), *lo, *hi};
}

}  // namespace

DepthObject DepthObject::FromSegment(const Segment3& s, int id) {
  ValidateSegment(s);
  DepthObject o;
  o.kind_ = Kind::kSegment;
  o.id_ = id;
  o.segment_ = s;
  o.projection_ = {Project(s.a), Project(s.b)};
  o.bbox_ = BoundsOf(o.projection_);
  return o;
}

DepthObject DepthObject::FromTriangle(const Triangle3& t) {
  ValidateTriangle(t);
  return FromFragment(ConvexFragment::FromTriangle(t), t.id);
}

DepthObject DepthObject::FromFragment(const ConvexFragment& f, int id) {
  DepthObject o;
  o.kind_ = Kind::kPolygon;
  o.id_ = id;
  o.fragment_ = f;
  o.projection_ = f.boundary;
  o.bbox_ = BoundsOf(o.projection_);
  return o;
}

Rational DepthObject::ZAt(const Point2& p) const {
  if (kind_ == Kind::kPolygon) return fragment_.plane.ZAt(p);
  return segment_.ZAbove(p);
}

bool DepthObject::Contains(const Point2& p) const {
  if (kind_ == Kind::kSegment) {
    if (segment_.open_a && p == projection_[0]) return false;
    if (segment_.open_b && p == projection_[1]) return false;
    return true;
  }
  const std::size_t n = projection_.size();
  for (std::size_t i = 0; i < n; ++i) {
    if (p == projection_[i])
      return fragment_.edges[i] == EdgeKind::kOriginal && fragment_.edges[(i + n - 1) % n] == EdgeKind::kOriginal;
  }
  for (std::size_t i = 0; i < n; ++i)
    if (Orient2d(projection_[i], projection_[(i + 1) % n], p) == 0) return fragment_.edges[i] == EdgeKind::kOriginal;
  return true;
}

DisjointnessViolation::DisjointnessViolation(int a, int b, Point2 where)
    : std::runtime_error("objects " + std::to_string(a) + " and " + std::to_string(b) +
                         " intersect above " + ToString(where)),
      a(a),
      b(b),
      where(std::move(where)) {}

Classification Classify(const DepthObject& a, const DepthObject& b) {
  Classification out;
  if (!a.bbox().Overlaps(b.bbox())) return out;
  const std::vector<Point2> r = IntersectConvex(a.projection(), b.projection());
  if (r.empty()) return out;

  std::vector<Rational> d(r.size());
  bool pos = false, neg = false, zero_vertex = false;
  for (std::size_t i = 0; i < r.size(); ++i) {
    d[i] = a.ZAt(r[i]) - b.ZAt(r[i]);
    pos |= sgn(d[i]) > 0;
    neg |= sgn(d[i]) < 0;
    zero_vertex |= sgn(d[i]) == 0;
  }

  if (zero_vertex || (pos && neg)) {
    // The zero set of the affine height difference over r.
    std::vector<Point2> zero;
    if (!pos && !neg) {
      zero = r;
    } else {
      const std::size_t n = r.size();
      for (std::size_t i = 0; i < n; ++i) {
        const std::size_t j = (i + 1) % n;
        const int si = sgn(d[i]), sj = sgn(d[j]);
        if (si == 0) zero.push_back(r[i]);
        if (si * sj < 0) {
          const Rational t = d[i] / (d[i] - d[j]);
          zero.push_back({r[i].x + t * (r[j].x - r[i].x), r[i].y + t * (r[j].y - r[i].y)});
        }
      }
    }
    for (const auto& p : Probes(zero)) {
      if (InBoth(a, b, p)) {
        out.intersecting = true;
        out.contact = p;
        return out;
      }
    }
  }

  for (const auto& p : Probes(r)) {
    if (!InBoth(a, b, p)) continue;
    const int s = sgn(a.ZAt(p) - b.ZAt(p));
    if (s == 0) continue;
    out.below.relation = s < 0 ? Relation::kABelowB : Relation::kBBelowA;
    out.below.witness = p;
    return out;
  }
  return out;
}

BelowResult Below(const DepthObject& a, const DepthObject& b) {
  Classification c = Classify(a, b);
  if (c.intersecting) throw DisjointnessViolation(a.id(), b.id(), c.contact);
  return c.below;
}

std::vector<std::pair<std::size_t, std::size_t>> CandidatePairs(const std::vector<DepthObject>& objects) {
  std::vector<std::size_t> order(objects.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](std::size_t i, std::size_t j) { return objects[i].bbox().x0 < objects[j].bbox().x0; });
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t k = 0; k < order.size(); ++k) {
    const BBox2& bi = objects[order[k]].bbox();
    for (std::size_t l = k + 1; l < order.size(); ++l) {
      const BBox2& bj = objects[order[l]].bbox();
      if (bj.x0 > bi.x1) break;
      if (bi.Overlaps(bj)) pairs.emplace_back(std::min(order[k], order[l]), std::max(order[k], order[l]));
    }
  }
  std::sort(pairs.begin(), pairs.end());
  return pairs;
}

std::optional<std::pair<std::size_t, std::size_t>> PairwiseDisjoint3d(const std::vector<DepthObject>& objects) {
  for (const auto& [i, j] : CandidatePairs(objects))
    if (Classify(objects[i], objects[j]).intersecting) return std::pair(i, j);
  return std::nullopt;
}

}  // namespace depthcut
