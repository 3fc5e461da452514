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
#include <stdexcept>
#include <utility>
#include <vector>

#include "depthcut/geometry.hpp"

namespace depthcut {

/// Conservative double-precision bounding box of a projection.
struct BBox2 {
  double x0 = 0, y0 = 0, x1 = 0, y1 = 0;
  bool Overlaps(const BBox2& o) const { return x0 <= o.x1 && o.x0 <= x1 && y0 <= o.y1 && o.y0 <= y1; }
};

/// A segment or a convex planar fragment, the two kinds of objects the depth
/// relation is defined on.
class DepthObject {
 public:
  enum class Kind { kSegment, kPolygon };

  static DepthObject FromSegment(const Segment3& s, int id);
  static DepthObject FromTriangle(const Triangle3& t);
  static DepthObject FromFragment(const ConvexFragment& f, int id);

  Kind kind() const { return kind_; }
  int id() const { return id_; }
  const Segment3& segment() const { return segment_; }
  const ConvexFragment& fragment() const { return fragment_; }
  const std::vector<Point2>& projection() const { return projection_; }
  const BBox2& bbox() const { return bbox_; }

  /// Height above p, for p in the closed projection.
  Rational ZAt(const Point2& p) const;
  /// Whether p (known to lie in the closed projection) belongs to the object.
  /// Open edges and open endpoints are excluded, and so is every endpoint of
  /// an open edge: a fragment vertex belongs only if both its edges are closed.
  bool Contains(const Point2& p) const;

 private:
  Kind kind_ = Kind::kPolygon;
  int id_ = 0;
  Segment3 segment_;
  ConvexFragment fragment_;
  std::vector<Point2> projection_;
  BBox2 bbox_;
};

enum class Relation { kUnrelated, kABelowB, kBBelowA };

/// Thrown when two objects that must be disjoint share a point.
class DisjointnessViolation : public std::runtime_error {
 public:
  DisjointnessViolation(int a, int b, Point2 where);
  int a, b;
  Point2 where;
};

struct BelowResult {
  Relation relation = Relation::kUnrelated;
  Point2 witness;  // meaningful unless unrelated
};

/// Exact below-relation. The witness is the centroid of the projected overlap
/// when it has area, otherwise a shared point. Throws DisjointnessViolation.
BelowResult Below(const DepthObject& a, const DepthObject& b);

/// Like Below, but reports a 3-space intersection instead of throwing.
struct Classification {
  BelowResult below;
  bool intersecting = false;
  Point2 contact;  // projected common point when intersecting
};
Classification Classify(const DepthObject& a, const DepthObject& b);

/// First pair (by index) of objects sharing a point in 3-space, if any.
std::optional<std::pair<std::size_t, std::size_t>> PairwiseDisjoint3d(const std::vector<DepthObject>& objects);

/// Index pairs i < j whose bounding boxes overlap, sorted.
std::vector<std::pair<std::size_t, std::size_t>> CandidatePairs(const std::vector<DepthObject>& objects);

}  // namespace depthcut
