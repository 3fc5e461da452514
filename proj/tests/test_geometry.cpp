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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "depthcut/polygon.hpp"
#include "depthcut/relation.hpp"

using namespace depthcut;

namespace {

Rational Q(const char* s) { return ParseRational(s); }

Triangle3 Tri(Point3 a, Point3 b, Point3 c, int id = 0) { return {a, b, c, id}; }

Rational AreaOf(const ConvexFragment& f) { return TwiceSignedArea(f.boundary) / 2; }

}  // namespace

TEST_CASE("rational parsing and formatting round-trip") {
  CHECK(ParseRational("12") == 12);
  CHECK(ParseRational("-0.125") == Rational(-1, 8));
  CHECK(ParseRational("3.5e-2") == Rational(7, 200));
  CHECK(ParseRational("7/3") == Rational(7, 3));
  CHECK(ParseRational(".5") == Rational(1, 2));
  CHECK_THROWS_AS(ParseRational("1/0"), ParseError);
  CHECK_THROWS_AS(ParseRational("abc"), ParseError);
  CHECK_THROWS_AS(ParseRational(""), ParseError);
  CHECK(FormatRational(Rational(-1, 8)) == "-0.125");
  CHECK(FormatRational(Rational(7, 3)) == "7/3");
  CHECK(FormatRational(Rational(1, 20)) == "0.05");
  std::mt19937_64 rng(3);
  for (int i = 0; i < 200; ++i) {
    Rational q(static_cast<long>(rng() % 20001) - 10000, static_cast<long>(rng() % 999) + 1);
    q.canonicalize();
    CHECK(ParseRational(FormatRational(q)) == q);
  }
}

TEST_CASE("project drops z") {
  CHECK(Project(Point3{1, 2, 5}) == Point2{1, 2});
  Segment3 s{{0, 0, 0}, {1, 1, 1}};
  CHECK(ProjectSegment(s).a == Point2{0, 0});
  CHECK(ProjectSegment(s).b == Point2{1, 1});
  auto t = ProjectTriangle(Tri({0, 0, 0}, {2, 0, 1}, {0, 2, 2}));
  CHECK(t == std::vector<Point2>{{0, 0}, {2, 0}, {0, 2}});
}

TEST_CASE("orient2d") {
  CHECK(Orient2d({0, 0}, {1, 0}, {0, 1}) == 1);
  CHECK(Orient2d({0, 0}, {1, 1}, {2, 2}) == 0);
  CHECK(Orient2d({0, 0}, {0, 1}, {1, 0}) == -1);
}

TEST_CASE("orient2d is scale invariant") {
  std::mt19937_64 rng(11);
  auto r = [&] { return Rational(static_cast<long>(rng() % 201) - 100, static_cast<long>(rng() % 7) + 1); };
  for (int i = 0; i < 300; ++i) {
    Point2 p{r(), r()}, q{r(), r()}, s{r(), r()};
    Rational k(static_cast<long>(rng() % 50) + 1, static_cast<long>(rng() % 13) + 1);
    CHECK(Orient2d(p, q, s) == Orient2d({p.x * k, p.y * k}, {q.x * k, q.y * k}, {s.x * k, s.y * k}));
  }
}

TEST_CASE("segments_intersect_2d") {
  using Kind = SegmentIntersection2::Kind;
  auto a = SegmentsIntersect2d({{0, 0}, {2, 0}}, {{1, -1}, {1, 1}});
  CHECK(a.kind == Kind::kPoint);
  CHECK(a.p == Point2{1, 0});
  CHECK(SegmentsIntersect2d({{0, 0}, {1, 0}}, {{0, 1}, {1, 1}}).kind == Kind::kEmpty);
  auto c = SegmentsIntersect2d({{0, 0}, {3, 0}}, {{1, 0}, {2, 0}});
  CHECK(c.kind == Kind::kOverlap);
  CHECK(c.p == Point2{1, 0});
  CHECK(c.q == Point2{2, 0});
  auto touch = SegmentsIntersect2d({{0, 0}, {2, 0}}, {{2, 0}, {3, 5}});
  CHECK(touch.kind == Kind::kPoint);
  CHECK(touch.p == Point2{2, 0});
}

TEST_CASE("clip_to_cell") {
  const Cell2 big = Cell2::Box(-10, -10, 10, 10);
  auto inside = ClipToCell(Tri({0, 0, 0}, {1, 0, 0}, {0, 1, 0}), big);
  REQUIRE(inside);
  CHECK(inside->size() == 3);
  for (auto e : inside->edges) CHECK(e == EdgeKind::kOriginal);

  const Cell2 small = Cell2::Box(Q("0.1"), Q("0.1"), Q("0.2"), Q("0.2"));
  auto covered = ClipToCell(Tri({0, 0, 0}, {1, 0, 1}, {0, 1, 2}), small);
  REQUIRE(covered);
  CHECK(AreaOf(*covered) == small.TwiceArea() / 2);
  for (auto e : covered->edges) CHECK(e == EdgeKind::kCut);
  CHECK(covered->Vertex3(0).z == covered->plane.ZAt(covered->boundary[0]));

  const ConvexFragment unit = ConvexFragment::FromTriangle(Tri({0, 0, 0}, {1, 0, 0}, {0, 1, 0}));
  auto left = ClipHalfPlane(unit, HalfPlane::XAtMost(Rational(1, 2)));
  auto right = ClipHalfPlane(unit, HalfPlane::XAtLeast(Rational(1, 2)));
  REQUIRE(left);
  REQUIRE(right);
  CHECK(left->size() == 4);
  int cuts = 0;
  for (std::size_t i = 0; i < left->size(); ++i) {
    if (left->edges[i] != EdgeKind::kCut) continue;
    ++cuts;
    CHECK(left->boundary[i].x == Rational(1, 2));
    CHECK(left->boundary[(i + 1) % left->size()].x == Rational(1, 2));
  }
  CHECK(cuts == 1);
  CHECK(AreaOf(*left) + AreaOf(*right) == AreaOf(unit));

  CHECK_FALSE(ClipToCell(Tri({20, 20, 0}, {21, 20, 0}, {20, 21, 0}), big));
  // Touching the cell only along its boundary has empty interior.
  CHECK_FALSE(ClipToCell(Tri({10, 0, 0}, {12, 0, 0}, {10, 2, 0}), big));
}

TEST_CASE("slice_by_vertical_plane") {
  const ConvexFragment t = ConvexFragment::FromTriangle(Tri({0, 0, 0}, {2, 0, 0}, {0, 2, 0}));
  auto parts = SliceByVerticalPlane(t, Rational(1));
  REQUIRE(parts.size() == 2);
  CHECK(AreaOf(parts[0]) == Rational(3, 2));  // x <= 1: quadrilateral
  CHECK(parts[0].size() == 4);
  CHECK(AreaOf(parts[1]) == Rational(1, 2));
  CHECK(parts[1].size() == 3);
  CHECK(AreaOf(parts[0]) + AreaOf(parts[1]) == 2);

  CHECK(SliceByVerticalPlane(t, Rational(2)).size() == 1);
  CHECK(SliceByVerticalPlane(t, Rational(0)).size() == 1);
  auto oblique = SliceByVerticalPlane(t, Point2{0, 0}, Point2{1, 1});
  REQUIRE(oblique.size() == 2);
  CHECK(AreaOf(oblique[0]) == 1);
  CHECK(AreaOf(oblique[1]) == 1);
}

TEST_CASE("clip and slice conserve area on random partitions") {
  std::mt19937_64 rng(5);
  auto r = [&] { return Rational(static_cast<long>(rng() % 2001) - 1000, 100); };
  for (int trial = 0; trial < 100; ++trial) {
    Triangle3 tri{{r(), r(), r()}, {r(), r(), r()}, {r(), r(), r()}, 0};
    if (Orient2d(Project(tri.a), Project(tri.b), Project(tri.c)) == 0) continue;
    std::vector<ConvexFragment> parts{ConvexFragment::FromTriangle(tri)};
    const Rational total = AreaOf(parts[0]);
    for (int cut = 0; cut < 4; ++cut) {
      std::vector<ConvexFragment> next;
      Point2 p{r(), r()}, q{r(), r()};
      if (p == q) continue;
      for (const auto& f : parts) {
        auto sliced = cut % 2 ? SliceByVerticalPlane(f, p.x) : SliceByVerticalPlane(f, p, q);
        next.insert(next.end(), sliced.begin(), sliced.end());
      }
      parts = std::move(next);
    }
    Rational sum = 0;
    for (const auto& f : parts) {
      sum += AreaOf(f);
      CHECK(AreaOf(f) > 0);
      // Original edges stay on the parent's boundary.
      for (std::size_t i = 0; i < f.size(); ++i) {
        if (f.edges[i] != EdgeKind::kOriginal) continue;
        const Point2 &u = f.boundary[i], &v = f.boundary[(i + 1) % f.size()];
        const auto proj = ProjectTriangle(tri);
        bool on_edge = false;
        for (int k = 0; k < 3; ++k) {
          const Segment2 e{proj[k], proj[(k + 1) % 3]};
          on_edge |= OnSegment(u, e) && OnSegment(v, e);
        }
        CHECK(on_edge);
      }
    }
    CHECK(sum == total);
  }
}

TEST_CASE("intersect convex handles degenerate inputs") {
  std::vector<Point2> square{{0, 0}, {2, 0}, {2, 2}, {0, 2}};
  auto seg = IntersectConvex({{-1, 1}, {3, 1}}, square);
  REQUIRE(seg.size() == 2);
  auto pt = IntersectConvex({{1, 1}}, square);
  CHECK(pt.size() == 1);
  CHECK(IntersectConvex(square, {{5, 5}}).empty());
  auto edge = IntersectConvex(square, {{2, 0}, {2, 5}});
  REQUIRE(edge.size() == 2);
  CHECK(IntersectConvex({{0, 0}, {1, 0}}, {{2, 0}, {3, 0}}).empty());
}

TEST_CASE("below relation") {
  const auto lo = DepthObject::FromTriangle(Tri({0, 0, 0}, {4, 0, 0}, {0, 4, 0}, 0));
  const auto hi = DepthObject::FromTriangle(Tri({0, 0, 1}, {4, 0, 1}, {0, 4, 1}, 1));
  auto r = Below(lo, hi);
  CHECK(r.relation == Relation::kABelowB);
  CHECK(r.witness == Point2{Rational(4, 3), Rational(4, 3)});
  CHECK(Below(hi, lo).relation == Relation::kBBelowA);

  const auto far = DepthObject::FromTriangle(Tri({10, 10, 0}, {11, 10, 0}, {10, 11, 0}, 2));
  CHECK(Below(lo, far).relation == Relation::kUnrelated);

  const auto crossing = DepthObject::FromTriangle(Tri({1, 1, -1}, {3, 1, 1}, {1, 2, 1}, 3));
  CHECK_THROWS_AS(Below(lo, crossing), DisjointnessViolation);

  // A segment above a triangle; a segment touching it only at an open end.
  Segment3 s{{-1, 1, 2}, {1, 1, 2}};
  CHECK(Below(lo, DepthObject::FromSegment(s, 4)).relation == Relation::kABelowB);
  Segment3 tip{{-1, 1, 0}, {0, 1, 0}, false, true};
  CHECK(Below(lo, DepthObject::FromSegment(tip, 5)).relation == Relation::kUnrelated);
  tip.open_b = false;
  CHECK_THROWS_AS(Below(lo, DepthObject::FromSegment(tip, 5)), DisjointnessViolation);
}

TEST_CASE("contact through open cut edges is unrelated") {
  ConvexFragment left = ConvexFragment::FromTriangle(Tri({0, 0, 0}, {2, 0, 0}, {0, 2, 0}));
  auto parts = SliceByVerticalPlane(left, Rational(1));
  REQUIRE(parts.size() == 2);
  // Lift the right part; the two pieces meet only above the open cut x = 1.
  ConvexFragment raised = parts[1];
  raised.plane.c += 1;
  auto a = DepthObject::FromFragment(parts[0], 0);
  auto b = DepthObject::FromFragment(raised, 1);
  CHECK(Below(a, b).relation == Relation::kUnrelated);
  // Siblings of one slice touch only along the open edge.
  CHECK_FALSE(Classify(a, DepthObject::FromFragment(parts[1], 1)).intersecting);
}

TEST_CASE("below is antisymmetric and sign-constant over the overlap") {
  std::mt19937_64 rng(17);
  auto r = [&](int lo, int hi) { return Rational(lo + static_cast<long>(rng() % (hi - lo + 1)), 4); };
  int related = 0;
  for (int trial = 0; trial < 300; ++trial) {
    Triangle3 a{{r(0, 40), r(0, 40), r(0, 10)}, {r(0, 40), r(0, 40), r(0, 10)}, {r(0, 40), r(0, 40), r(0, 10)}, 0};
    Triangle3 b{{r(0, 40), r(0, 40), r(12, 30)}, {r(0, 40), r(0, 40), r(12, 30)}, {r(0, 40), r(0, 40), r(12, 30)}, 1};
    if (Orient2d(Project(a.a), Project(a.b), Project(a.c)) == 0) continue;
    if (Orient2d(Project(b.a), Project(b.b), Project(b.c)) == 0) continue;
    const auto oa = DepthObject::FromTriangle(a), ob = DepthObject::FromTriangle(b);
    const auto ab = Below(oa, ob), ba = Below(ob, oa);
    if (ab.relation == Relation::kUnrelated) {
      CHECK(ba.relation == Relation::kUnrelated);
      continue;
    }
    ++related;
    CHECK(ab.relation == Relation::kABelowB);  // a lies entirely below b
    CHECK(ba.relation == Relation::kBBelowA);
    // Sample points of the overlap as convex combinations of its vertices.
    auto overlap = IntersectConvex(oa.projection(), ob.projection());
    for (int k = 0; k < 20; ++k) {
      Point2 p{0, 0};
      Rational wsum = 0;
      for (const auto& v : overlap) {
        Rational w(static_cast<long>(rng() % 10) + 1);
        p.x += w * v.x;
        p.y += w * v.y;
        wsum += w;
      }
      p.x /= wsum;
      p.y /= wsum;
      CHECK(oa.ZAt(p) < ob.ZAt(p));
    }
  }
  CHECK(related > 50);
}

TEST_CASE("pairwise_disjoint_3d") {
  std::vector<DepthObject> stacked{DepthObject::FromTriangle(Tri({0, 0, 0}, {4, 0, 0}, {0, 4, 0}, 0)),
                                   DepthObject::FromTriangle(Tri({0, 0, 1}, {4, 0, 1}, {0, 4, 1}, 1))};
  CHECK_FALSE(PairwiseDisjoint3d(stacked));
  stacked.push_back(DepthObject::FromTriangle(Tri({1, 1, -1}, {3, 1, 2}, {1, 2, 2}, 2)));
  auto bad = PairwiseDisjoint3d(stacked);
  REQUIRE(bad);
  CHECK(bad->first == 0);
  CHECK(bad->second == 2);
}
