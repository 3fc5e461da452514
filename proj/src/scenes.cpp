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

#include "depthcut/scenes.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "depthcut/depth_graph.hpp"

namespace depthcut {

namespace {

Rational Q(long num, long den = 1) { return Rational(num) / den; }

Segment3 Seg(const Rational& ax, const Rational& ay, const Rational& az, const Rational& bx, const Rational& by,
             const Rational& bz) {
  return {{ax, ay, az}, {bx, by, bz}};
}

// Incremental rejection test against already accepted triangles.
bool FitsWith(const Triangle3& t, std::vector<DepthObject>& accepted) {
  const DepthObject obj = DepthObject::FromTriangle(t);
  for (const auto& other : accepted)
    if (obj.bbox().Overlaps(other.bbox()) && Classify(obj, other).intersecting) return false;
  accepted.push_back(obj);
  return true;
}

void Finish(Scene& s) {
  for (std::size_t i = 0; i < s.triangles.size(); ++i) s.triangles[i].id = static_cast<int>(i);
  ValidateScene(s);
  AnnotateScene(s);
}

}  // namespace

std::string Scene::Param(const std::string& key) const {
  for (const auto& [k, v] : params)
    if (k == key) return v;
  return "";
}

std::vector<DepthObject> SceneObjects(const Scene& scene) {
  std::vector<DepthObject> objs;
  for (std::size_t i = 0; i < scene.triangles.size(); ++i) {
    Triangle3 t = scene.triangles[i];
    t.id = static_cast<int>(i);
    objs.push_back(DepthObject::FromTriangle(t));
  }
  for (std::size_t i = 0; i < scene.segments.size(); ++i)
    objs.push_back(DepthObject::FromSegment(scene.segments[i], static_cast<int>(scene.triangles.size() + i)));
  return objs;
}

void ValidateScene(const Scene& scene) {
  for (const auto& t : scene.triangles) ValidateTriangle(t);
  for (const auto& s : scene.segments) ValidateSegment(s);
  const auto objs = SceneObjects(scene);
  if (auto bad = PairwiseDisjoint3d(objs)) {
    const auto c = Classify(objs[bad->first], objs[bad->second]);
    throw DisjointnessViolation(static_cast<int>(bad->first), static_cast<int>(bad->second), c.contact);
  }
}

void AnnotateScene(Scene& scene) {
  scene.has_cycle = !IsAcyclic(SceneObjects(scene));
  scene.expected_min_cuts.reset();
  scene.expected_min_cuts_source.clear();
  if (!scene.triangles.empty() || scene.segments.empty() || scene.segments.size() > 16) return;
  if (DetectDegeneracies(scene.segments).any()) return;
  try {
    scene.expected_min_cuts = static_cast<int>(ExactSmallCutSet(scene.segments).size());
    scene.expected_min_cuts_source = "exact_small_cut_set";
  } catch (const BudgetExceeded&) {
  }
}

Triangle3 ThinTriangle(const Segment3& s, const Rational& w) {
  const Rational dx = s.b.x - s.a.x, dy = s.b.y - s.a.y;
  const Rational norm = (dx < 0 ? Rational(-dx) : dx) + (dy < 0 ? Rational(-dy) : dy);
  const Rational nx = -dy * w / norm, ny = dx * w / norm;
  return {s.a, {s.b.x + nx, s.b.y + ny, s.b.z}, {s.b.x - nx, s.b.y - ny, s.b.z}};
}

Scene GenCyclicTriple() {
  Scene s;
  s.family = "cyclic-triple";
  // Three needles around the triangle (0,0), (10,0), (5,8), each sloping down
  // along its direction.
  const Point2 a{0, 0}, b{10, 0}, c{5, 8};
  auto needle = [](const Point2& p, const Point2& q) {
    const Segment3 line{{p.x, p.y, 2}, {q.x, q.y, 0}};
    return ThinTriangle({line.At(Q(-1, 10)), line.At(Q(11, 10))}, Q(1, 2));
  };
  s.triangles = {needle(a, b), needle(b, c), needle(c, a)};
  Finish(s);
  return s;
}

namespace {

// Two families of m segments over an m x m grid of crossings. Horizontal i
// has z = i x + a_i and vertical j is flat at c_j, so the height difference
// at crossing (j, i) is i j + a_i - c_j; the constants put a 4-cycle in every
// diagonal block (2b, 2b+1) x (2b, 2b+1).
std::vector<Segment3> WeaveFamilies(int m, bool shear) {
  std::vector<Segment3> out;
  auto map = [&](const Rational& x, const Rational& y, const Rational& z) {
    if (!shear) return Point3{x, y, z};
    return Point3{x + y, (y - x) / 10, z};
  };
  for (int i = 0; i < m; ++i) {
    const int k = i - (i % 2);
    const Rational a = -Rational(i) * (Rational(k) + Q(1, 2));
    const Rational x0 = -1, x1 = m;
    out.push_back({map(x0, i, Rational(i) * x0 + a), map(x1, i, Rational(i) * x1 + a)});
  }
  for (int j = 0; j < m; ++j) {
    const int b = j / 2;
    const Rational c = j % 2 == 0 ? Rational(Rational(-b) - Q(1, 4)) : Rational(Rational(b) + Q(1, 4));
    out.push_back({map(j, -1, c), map(j, m, c)});
  }
  return out;
}

}  // namespace

Scene GenBipartiteWeaving(int m, bool thin) {
  if (m < 2) throw SceneError("bipartite weaving needs m >= 2");
  Scene s;
  s.family = "bipartite-weaving";
  s.params = {{"m", std::to_string(m)}, {"thin", thin ? "1" : "0"}};
  const auto segs = WeaveFamilies(m, true);
  if (thin) {
    // Horizontal i tilts by i per unit x and the shear stretches the width
    // fivefold in x, so the height error grows like m^2 w against gaps of 1/4.
    const Rational w = Q(1, 50 * m * m);
    for (const auto& seg : segs) s.triangles.push_back(ThinTriangle(seg, w));
  } else {
    s.segments = segs;
  }
  Finish(s);
  return s;
}

Scene GenGridWeaving(int m) {
  if (m < 2) throw SceneError("grid weaving needs m >= 2");
  Scene s;
  s.family = "grid-weaving";
  s.params = {{"m", std::to_string(m)}};
  s.segments = WeaveFamilies(m, false);
  Finish(s);
  return s;
}

Fig3Layout Fig3Geometry() { return {1, -6, 30, 6, {10, 0, 0}}; }

Scene GenFig3Gadget() {
  Scene s;
  s.family = "fig3";
  // Green: horizontal at z = 0, its top edge on y = 0 and the rest of the
  // column below it. Along the green edge the crossings are b1 (x=3), r1 (6),
  // b2 (13), r2 (16). b1 and r1 run above the green triangle, b2 and r2 below.
  // Inside the green triangle b1 crosses both red segments, so any cut line
  // either splits b1 (blue cycle survives) or keeps both red crossings on one
  // side (red cycle survives). All six segment pairs cross inside the column,
  // consistently with r1 < r2 < b1 < b2.
  const Rational w = Q(1, 50);
  s.triangles.push_back({{-40, 0, 0}, {60, 0, 0}, {10, -100, 0}});
  auto line = [](const Rational& x0, const Rational& slope, const Rational& z0, const Rational& dz) {
    // y = slope (x - x0), z = z0 + dz x, over x in [-1, 32]
    return Seg(-1, slope * (-1 - x0), z0 - dz, 32, slope * (32 - x0), z0 + dz * 32);
  };
  s.triangles.push_back(ThinTriangle(line(3, -1, 1, 0), w));                  // b1
  s.triangles.push_back(ThinTriangle(line(13, Q(-1, 11), Q(5, 2), Q(-1, 5)), w));  // b2
  s.triangles.push_back(ThinTriangle(line(6, Q(1, 4), Q(1, 2), 0), w));         // r1
  s.triangles.push_back(ThinTriangle(line(16, Q(1, 2), Q(-17, 2), Q(1, 2)), w));   // r2
  const auto g = Fig3Geometry();
  s.params = {{"column", FormatRational(g.x0) + " " + FormatRational(g.y0) + " " + FormatRational(g.x1) + " " +
                             FormatRational(g.y1)},
              {"cut", ToString(g.cut)},
              {"roles", "green blue blue red red"}};
  Finish(s);
  return s;
}

ColumnContents Fig3Column(const Scene& gadget) {
  const auto g = Fig3Geometry();
  ColumnContents col;
  col.cell = Cell2::Box(g.x0, g.y0, g.x1, g.y1);
  for (const auto& t : gadget.triangles) {
    auto f = ClipToCell(t, col.cell);
    if (!f) throw SceneError("fig3 triangle misses the column");
    f->parent_id = t.id;
    col.fragments.push_back(*f);
  }
  return col;
}

Scene GenRandomTriangles(int n, std::uint64_t seed, double spread) {
  if (n < 1) throw SceneError("random triangles need n >= 1");
  Scene s;
  s.family = "random";
  s.seed = seed;
  s.params = {{"n", std::to_string(n)}, {"spread", std::to_string(spread)}};
  std::mt19937_64 rng(seed);
  const long side = std::max(8L, static_cast<long>(std::ceil(8.0 * spread * std::sqrt(static_cast<double>(n)))));
  const long depth = 4L * n;
  auto uni = [&](long lo, long hi) { return lo + static_cast<long>(rng() % static_cast<std::uint64_t>(hi - lo + 1)); };
  std::vector<DepthObject> accepted;
  long attempts = 0;
  while (static_cast<int>(s.triangles.size()) < n) {
    if (++attempts > 1000L * n) throw SceneError("random triangles: density infeasible");
    const long cx = uni(0, side), cy = uni(0, side), cz = uni(0, depth);
    Triangle3 t;
    Point3* v[3] = {&t.a, &t.b, &t.c};
    for (auto* p : v) *p = {Rational(cx + uni(-8, 8)), Rational(cy + uni(-8, 8)), Rational(cz + uni(-3, 3))};
    if (Orient2d(Project(t.a), Project(t.b), Project(t.c)) == 0) continue;
    if (!FitsWith(t, accepted)) continue;
    s.triangles.push_back(t);
  }
  Finish(s);
  return s;
}

Scene GenParallelTriangles(int n, std::uint64_t seed) {
  if (n < 1) throw SceneError("parallel triangles need n >= 1");
  Scene s;
  s.family = "parallel";
  s.seed = seed;
  s.params = {{"n", std::to_string(n)}};
  // Needles along the parallel-lines family: apex on x = 0, base on the shared
  // line x = 64. Long edges of different needles stay at least 1 - 2w apart,
  // so no two edge lines cross inside the bounding box.
  std::mt19937_64 rng(seed);
  const Rational w = Q(1, 4);
  for (int i = 0; i < n; ++i) {
    const Rational z = static_cast<long>(rng() % 8);
    s.triangles.push_back({{0, i, z}, {64, i + 32 - w, z}, {64, i + 32 + w, z}});
  }
  Finish(s);
  return s;
}

Scene GenParallelOverlap(int k) {
  if (k < 2) throw SceneError("parallel overlap needs k >= 2");
  Scene s;
  s.family = "parallel-overlap";
  s.params = {{"k", std::to_string(k)}};
  // k collinear segments at heights 0..k-1, all covering x in [k-1, k]. c1
  // crosses the line above all of them, c2 below, and c1 passes under c2.
  for (int i = 0; i < k; ++i) s.segments.push_back(Seg(i, 0, i, i + k, 0, i));
  const Rational x1 = Rational(k) - Q(3, 4), x2 = Rational(k) - Q(1, 4);
  const Rational b = Rational(4 * k + 8);
  s.segments.push_back(Seg(x1 - 1, -2, k, x1 + 1, 2, k));
  s.segments.push_back(Seg(x2 + 1, -2, -1 - 2 * b, x2 - 1, 2, -1 + 2 * b));
  Finish(s);
  return s;
}

Scene GenConcurrentGadget() {
  Scene s;
  s.family = "concurrent";
  // A cyclic weave around (0,0), (10,0), (5,8) plus a fourth segment through
  // the corner (0,0) at a height between the two segments meeting there.
  const Point2 a{0, 0}, b{10, 0}, c{5, 8};
  auto seg = [](const Point2& p, const Point2& q) {
    const Segment3 line{{p.x, p.y, 2}, {q.x, q.y, 0}};
    return Segment3{line.At(Q(-1, 10)), line.At(Q(11, 10))};
  };
  s.segments = {seg(a, b), seg(b, c), seg(c, a), Seg(-2, -2, 1, 6, 6, 1)};
  Finish(s);
  return s;
}

Scene GenEndpointGadget() {
  Scene s;
  s.family = "endpoint";
  const Point2 a{0, 0}, b{10, 0}, c{5, 8};
  auto seg = [](const Point2& p, const Point2& q, const Rational& hi) {
    const Segment3 line{{p.x, p.y, 2}, {q.x, q.y, 0}};
    return Segment3{line.At(Q(-1, 10)), line.At(hi)};
  };
  // The first segment ends exactly on the second.
  s.segments = {seg(a, b, 1), seg(b, c, Q(11, 10)), seg(c, a, Q(11, 10))};
  Finish(s);
  return s;
}

Scene GenRandomLines(int n, std::uint64_t seed) {
  Scene s;
  s.family = "random-lines";
  s.seed = seed;
  s.params = {{"n", std::to_string(n)}};
  std::mt19937_64 rng(seed);
  const long side = 64;
  auto uni = [&](long lo, long hi) { return lo + static_cast<long>(rng() % static_cast<std::uint64_t>(hi - lo + 1)); };
  std::vector<DepthObject> accepted;
  long attempts = 0;
  while (static_cast<int>(s.segments.size()) < n) {
    if (++attempts > 1000L * n) throw SceneError("random lines: density infeasible");
    // Long segments from the left side of the box to the right side.
    Segment3 seg{{0, Rational(uni(0, side)), Rational(uni(0, 4 * n))}, {side, Rational(uni(0, side)), Rational(uni(0, 4 * n))}};
    const auto obj = DepthObject::FromSegment(seg, 0);
    bool ok = true;
    for (const auto& other : accepted)
      if (!obj.bbox().Overlaps(other.bbox())) continue;
      else if (Classify(obj, other).intersecting || SegmentsIntersect2d(seg.Projected(), other.segment().Projected()).kind ==
                                                   SegmentIntersection2::Kind::kOverlap) {
        ok = false;
        break;
      }
    if (!ok) continue;
    accepted.push_back(obj);
    s.segments.push_back(seg);
  }
  Finish(s);
  return s;
}

Scene GenParallelLines(int n) {
  Scene s;
  s.family = "parallel-lines";
  s.params = {{"n", std::to_string(n)}};
  for (int i = 0; i < n; ++i) s.segments.push_back(Seg(0, i, i % 7, 64, i + 32, i % 7));
  Finish(s);
  return s;
}

namespace {

Scene HorizontalFamily(const std::string& family, int n, std::uint64_t seed, bool dense) {
  Scene s;
  s.family = family;
  s.seed = seed;
  s.params = {{"n", std::to_string(n)}};
  std::mt19937_64 rng(seed);
  auto uni = [&](long lo, long hi) { return lo + static_cast<long>(rng() % static_cast<std::uint64_t>(hi - lo + 1)); };
  const long side = 16L * n;
  for (int i = 0; i < n; ++i) {
    const Rational z = i;
    if (dense) {
      // Long needles, half roughly horizontal and half roughly vertical, each
      // spanning half of the square.
      const long off = uni(0, side / 2), pos = uni(0, side);
      const Rational len = side / 2;
      if (i % 2 == 0)
        s.triangles.push_back({{off, pos, z}, {off + len, pos + 3, z}, {off + len, pos - 3, z}});
      else
        s.triangles.push_back({{pos, off, z}, {pos - 3, off + len, z}, {pos + 3, off + len, z}});
    } else {
      // Small triangles on a jittered grid, mostly touching one neighbour.
      const long cols = static_cast<long>(std::ceil(std::sqrt(static_cast<double>(n))));
      const long cx = (i % cols) * 16 + uni(0, 6), cy = (i / cols) * 16 + uni(0, 6);
      s.triangles.push_back({{cx, cy, z}, {cx + 16, cy + uni(1, 4), z}, {cx + uni(1, 4), cy + 12, z}});
    }
  }
  Finish(s);
  return s;
}

}  // namespace

Scene GenSparseK(int n, std::uint64_t seed) { return HorizontalFamily("sparse-k", n, seed, false); }
Scene GenDenseK(int n, std::uint64_t seed) { return HorizontalFamily("dense-k", n, seed, true); }

ColumnContents GenVertexFreeColumn(std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  auto uni = [&](long lo, long hi) { return lo + static_cast<long>(rng() % static_cast<std::uint64_t>(hi - lo + 1)); };
  ColumnContents col;
  col.cell = Cell2::Box(0, 0, 10, 10);
  const int triangles = static_cast<int>(uni(2, 5)), segments = static_cast<int>(uni(0, 3));
  std::vector<DepthObject> accepted;
  // Far points on the box [-30, 40]^2 minus the column.
  auto far = [&] {
    for (;;) {
      const Point2 p{Rational(uni(-30, 40)), Rational(uni(-30, 40))};
      if (!col.cell.ContainsClosed(p)) return p;
    }
  };
  auto plane_z = [&](const Point2& p, long a, long b, long c) { return Rational(Rational(a) / 8 * p.x + Rational(b) / 8 * p.y + c); };
  int tries = 0;
  while (static_cast<int>(col.fragments.size()) < triangles && ++tries < 2000) {
    const long a = uni(-2, 2), b = uni(-2, 2), c = uni(0, 20);
    const Point2 p = far(), q = far(), r = far();
    if (Orient2d(p, q, r) == 0) continue;
    Triangle3 t{{p.x, p.y, plane_z(p, a, b, c)}, {q.x, q.y, plane_z(q, a, b, c)}, {r.x, r.y, plane_z(r, a, b, c)}};
    auto f = ClipToCell(t, col.cell);
    if (!f || f->size() < 3 || TwiceSignedArea(f->boundary) == 0) continue;
    f->parent_id = static_cast<int>(col.fragments.size());
    const auto obj = DepthObject::FromFragment(*f, 0);
    bool ok = true;
    for (const auto& o : accepted) ok = ok && !Classify(obj, o).intersecting;
    if (!ok) continue;
    accepted.push_back(obj);
    col.fragments.push_back(*f);
  }
  tries = 0;
  while (static_cast<int>(col.segments.size()) < segments && ++tries < 2000) {
    const Point2 p = far(), q = far();
    if (p == q) continue;
    const Segment3 full{{p.x, p.y, Rational(uni(0, 20))}, {q.x, q.y, Rational(uni(0, 20))}};
    Rational lo = 0, hi = 1;
    bool empty = false;
    for (const auto& h : col.cell.sides) {
      const Rational g0 = h.Eval(p), g1 = h.Eval(q);
      if (g0 < 0 && g1 < 0) empty = true;
      if (empty || (g0 >= 0 && g1 >= 0)) continue;
      const Rational t = g0 / (g0 - g1);
      if (g0 < 0) lo = std::max(lo, t);
      else hi = std::min(hi, t);
    }
    if (empty || !(lo < hi)) continue;
    const Segment3 s{full.At(lo), full.At(hi), true, true};
    const auto obj = DepthObject::FromSegment(s, 0);
    bool ok = true;
    for (const auto& o : accepted) ok = ok && !Classify(obj, o).intersecting;
    if (!ok) continue;
    accepted.push_back(obj);
    col.segments.push_back(s);
  }
  return col;
}

std::vector<std::string> Families() {
  return {"cyclic-triple", "bipartite-weaving", "grid-weaving", "fig3", "random", "parallel", "parallel-overlap",
          "concurrent", "endpoint", "random-lines", "parallel-lines", "sparse-k", "dense-k"};
}

Scene Generate(const std::string& family, int n, std::uint64_t seed) {
  if (family == "cyclic-triple") return GenCyclicTriple();
  if (family == "bipartite-weaving") return GenBipartiteWeaving(n);
  if (family == "grid-weaving") return GenGridWeaving(n);
  if (family == "fig3") return GenFig3Gadget();
  if (family == "random") return GenRandomTriangles(n, seed);
  if (family == "parallel") return GenParallelTriangles(n, seed);
  if (family == "parallel-overlap") return GenParallelOverlap(n);
  if (family == "concurrent") return GenConcurrentGadget();
  if (family == "endpoint") return GenEndpointGadget();
  if (family == "random-lines") return GenRandomLines(n, seed);
  if (family == "parallel-lines") return GenParallelLines(n);
  if (family == "sparse-k") return GenSparseK(n, seed);
  if (family == "dense-k") return GenDenseK(n, seed);
  throw SceneError("unknown family '" + family + "'");
}

}  // namespace depthcut
