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

#include "depthcut/pipeline.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <map>
#include <sstream>

#include "depthcut/depth_graph.hpp"

namespace depthcut {

namespace {

using Clock = std::chrono::steady_clock;

double MsSince(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

// ceil(x) for a positive real that may carry rounding noise near an integer.
long CeilNear(double x) {
  const double nearest = std::round(x);
  if (std::fabs(x - nearest) < 1e-9) return std::max(1L, static_cast<long>(nearest));
  return std::max(1L, static_cast<long>(std::ceil(x)));
}

bool InsideTriangleStrictly(const Triangle3& t, const Point2& p) {
  const Point2 a = Project(t.a), b = Project(t.b), c = Project(t.c);
  const int o = Orient2d(a, b, c);
  return Orient2d(a, b, p) == o && Orient2d(b, c, p) == o && Orient2d(c, a, p) == o;
}

struct Range {
  Rational lo, hi;
};

Range XRange(const std::vector<Point2>& pts) {
  Range r{pts[0].x, pts[0].x};
  for (const auto& p : pts) {
    if (p.x < r.lo) r.lo = p.x;
    if (r.hi < p.x) r.hi = p.x;
  }
  return r;
}

void Descend(const CuttingHierarchy& h, const Triangle3& t, int triangle, const std::array<int, 3>& items,
             const Range& tx, int level, int index, std::vector<Piece>& out) {
  const CuttingCell& cell = h.levels[level].cells[index];
  if (tx.hi < cell.trap.xl || cell.trap.xr < tx.lo) return;
  bool crossed = false;
  for (int it : items) crossed |= std::binary_search(cell.crossing.begin(), cell.crossing.end(), it);
  if (!crossed) {
    if (!InsideTriangleStrictly(t, cell.trap.InteriorPoint())) return;
    auto f = ClipToCell(t, cell.trap.ToCell());
    if (f) out.push_back({*f, triangle, level, index, true});
    return;
  }
  if (level == h.k()) {
    auto f = ClipToCell(t, cell.trap.ToCell());
    if (f && f->size() >= 3 && TwiceSignedArea(f->boundary) > 0) out.push_back({*f, triangle, level, index, false});
    return;
  }
  for (int child : cell.children) Descend(h, t, triangle, items, tx, level + 1, child, out);
}

std::vector<Line2> EdgeLines(const Triangle3& t) {
  const Point2 p[3] = {Project(t.a), Project(t.b), Project(t.c)};
  return {Line2::Through(p[0], p[1]), Line2::Through(p[1], p[2]), Line2::Through(p[2], p[0])};
}

void ValidateScene(const std::vector<Triangle3>& triangles) {
  std::vector<DepthObject> objs;
  for (std::size_t i = 0; i < triangles.size(); ++i) {
    ValidateTriangle(triangles[i]);
    Triangle3 t = triangles[i];
    t.id = static_cast<int>(i);
    objs.push_back(DepthObject::FromTriangle(t));
  }
  if (auto bad = PairwiseDisjoint3d(objs)) {
    const auto c = Classify(objs[bad->first], objs[bad->second]);
    throw DisjointnessViolation(static_cast<int>(bad->first), static_cast<int>(bad->second), c.contact);
  }
}

std::vector<Point2> ProjectedVertices(const std::vector<Triangle3>& triangles) {
  std::vector<Point2> pts;
  for (const auto& t : triangles)
    for (int i = 0; i < 3; ++i) pts.push_back(Project(t.Vertex(i)));
  return pts;
}

// Phase 1, the prisms and phase 2, shared by both triangle pipelines.
FragmentationResult RunTwoPhase(const std::vector<Triangle3>& triangles, const CuttingHierarchy& h,
                                const std::vector<std::array<int, 3>>& edge_items, const PipelineParams& params,
                                PipelineStats stats) {
  FragmentationResult res;
  auto start = Clock::now();
  std::vector<Piece> pieces;
  for (std::size_t i = 0; i < triangles.size(); ++i) {
    auto mine = PiecesT1(h, triangles[i], static_cast<int>(i), edge_items[i]);
    for (auto& p : mine) pieces.push_back(std::move(p));
  }
  const PrismSubdivision sub = BuildPrisms(h, pieces, triangles);
  stats.ms_phase1 = MsSince(start);
  stats.t1 = static_cast<long>(pieces.size());
  stats.prisms = static_cast<long>(sub.prisms.size());
  stats.prism_budget = (stats.edges + stats.r - 1) / stats.r;

  start = Clock::now();
  for (std::size_t i = 0; i < pieces.size(); ++i) {
    if (sub.prism_of_piece[i] != -1) continue;
    res.t1_star.push_back(static_cast<int>(res.fragments.size()));
    res.fragments.push_back(pieces[i].fragment);
    res.origin.push_back({pieces[i].triangle, static_cast<int>(i), -1});
  }
  stats.t1_star = static_cast<long>(res.t1_star.size());
  for (std::size_t s = 0; s < sub.prisms.size(); ++s) {
    const Prism& prism = sub.prisms[s];
    stats.max_prism_edges = std::max(stats.max_prism_edges, static_cast<long>(prism.edges.size()));
    StepTwoResult two = Step2Cut(prism, pieces, params.strategy, params.seed + s);
    stats.cuts_x += static_cast<long>(two.cuts.size());
    stats.planes += static_cast<long>(two.planes);
    stats.degenerate_prisms += two.degenerate ? 1 : 0;
    for (std::size_t f = 0; f < two.fragments.size(); ++f) {
      res.fragments.push_back(std::move(two.fragments[f]));
      res.origin.push_back({pieces[two.piece_of[f]].triangle, two.piece_of[f], static_cast<int>(s)});
    }
  }
  stats.ms_phase2 = MsSince(start);
  stats.t2 = static_cast<long>(res.fragments.size());
  if (params.verify) {
    start = Clock::now();
    stats.hierarchy_check = VerifyHierarchy(h);
    stats.oracle_ok = FragmentsAcyclic(res.fragments);
    stats.ms_oracle = MsSince(start);
  }
  res.stats = std::move(stats);
  return res;
}

PipelineStats HierarchyStats(const CuttingHierarchy& h) {
  PipelineStats st;
  st.k = h.k();
  st.rho = h.rho;
  st.r = h.r;
  for (const auto& level : h.levels) st.level_cells.push_back(static_cast<long>(level.cells.size()));
  st.max_children = h.max_children;
  st.resamples = h.resamples;
  return st;
}

}  // namespace

std::vector<Piece> PiecesT1(const CuttingHierarchy& h, const Triangle3& t, int triangle,
                            const std::array<int, 3>& edge_items) {
  std::vector<Piece> out;
  const Range tx = XRange({Project(t.a), Project(t.b), Project(t.c)});
  Descend(h, t, triangle, edge_items, tx, 0, 0, out);
  return out;
}

PrismSubdivision BuildPrisms(const CuttingHierarchy& h, const std::vector<Piece>& pieces,
                             const std::vector<Triangle3>& triangles) {
  PrismSubdivision sub;
  const int k = h.k();
  const auto& leaves = h.leaves().cells;
  sub.slicers.resize(leaves.size());
  sub.prism_of_piece.assign(pieces.size(), -1);

  std::map<std::pair<int, int>, std::vector<int>> containment;
  std::vector<std::vector<int>> in_leaf(leaves.size());
  for (std::size_t i = 0; i < pieces.size(); ++i) {
    if (pieces[i].containment)
      containment[{pieces[i].level, pieces[i].cell}].push_back(pieces[i].triangle);
    else
      in_leaf[pieces[i].cell].push_back(static_cast<int>(i));
  }

  for (std::size_t leaf = 0; leaf < leaves.size(); ++leaf) {
    std::vector<int>& sl = sub.slicers[leaf];
    int cell = static_cast<int>(leaf);
    for (int level = k; level >= 0; --level) {
      auto it = containment.find({level, cell});
      if (it != containment.end()) sl.insert(sl.end(), it->second.begin(), it->second.end());
      cell = h.levels[level].cells[cell].parent;
    }
    if (in_leaf[leaf].empty()) continue;
    const Trapezoid& trap = leaves[leaf].trap;
    const Point2 base = trap.InteriorPoint();
    std::vector<std::pair<Rational, int>> heights;
    for (int t : sl) {
      const Triangle3& tri = triangles[t];
      heights.emplace_back(HeightPlane::Through(tri.a, tri.b, tri.c).ZAt(base), t);
    }
    std::sort(heights.begin(), heights.end());
    sl.clear();
    std::vector<HeightPlane> planes;
    for (const auto& [z, t] : heights) {
      sl.push_back(t);
      planes.push_back(HeightPlane::Through(triangles[t].a, triangles[t].b, triangles[t].c));
    }

    const Cell2 region = trap.ToCell();
    std::map<int, int> prism_at;  // slicers below -> prism index
    for (int pi : in_leaf[leaf]) {
      const Piece& piece = pieces[pi];
      const Point2 p = Centroid(piece.fragment.boundary);
      const Rational z = piece.fragment.plane.ZAt(p);
      int lo = 0, hi = static_cast<int>(planes.size());
      while (lo < hi) {
        const int mid = (lo + hi) / 2;
        if (planes[mid].ZAt(p) < z)
          lo = mid + 1;
        else
          hi = mid;
      }
      auto [it, fresh] = prism_at.emplace(lo, static_cast<int>(sub.prisms.size()));
      if (fresh) {
        Prism prism;
        prism.column = static_cast<int>(leaf);
        prism.below = lo > 0 ? sl[lo - 1] : -1;
        prism.above = lo < static_cast<int>(sl.size()) ? sl[lo] : -1;
        sub.prisms.push_back(std::move(prism));
      }
      Prism& prism = sub.prisms[it->second];
      sub.prism_of_piece[pi] = it->second;
      prism.pieces.push_back(pi);
      const ConvexFragment& f = piece.fragment;
      const std::size_t m = f.size();
      for (std::size_t e = 0; e < m; ++e) {
        if (f.edges[e] != EdgeKind::kOriginal) continue;
        const Point2 &a = f.boundary[e], &b = f.boundary[(e + 1) % m];
        if (!region.ContainsStrictly({(a.x + b.x) / 2, (a.y + b.y) / 2})) continue;
        prism.edges.push_back({f.Vertex3(e), f.Vertex3((e + 1) % m), true, true});
        prism.edge_triangle.push_back(piece.triangle);
      }
      const Triangle3& tri = triangles[piece.triangle];
      for (int v = 0; v < 3; ++v)
        if (region.ContainsStrictly(Project(tri.Vertex(v)))) prism.vertices.push_back(tri.Vertex(v));
    }
  }
  return sub;
}

StepTwoResult Step2Cut(const Prism& prism, const std::vector<Piece>& pieces, CutStrategy strategy,
                       std::uint64_t seed) {
  StepTwoResult res;
  if (prism.edges.size() >= 2) {
    try {
      res.cuts = ComputeCutSet(prism.edges, strategy, seed, &res.degenerate);
    } catch (const BudgetExceeded&) {
      res.cuts = ComputeCutSet(prism.edges, CutStrategy::kGreedy, seed, &res.degenerate);
    }
  }
  std::vector<Rational> xs;
  for (const auto& [i, list] : res.cuts.cuts)
    for (const auto& c : list) xs.push_back(c.point.x);
  for (const auto& v : prism.vertices) xs.push_back(v.x);
  std::sort(xs.begin(), xs.end());
  xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
  res.planes = xs.size();

  for (int pi : prism.pieces) {
    ConvexFragment rest = pieces[pi].fragment;
    const Range range = XRange(rest.boundary);
    for (auto it = std::upper_bound(xs.begin(), xs.end(), range.lo); it != xs.end() && *it < range.hi; ++it) {
      auto left = ClipHalfPlane(rest, HalfPlane::XAtMost(*it));
      auto right = ClipHalfPlane(rest, HalfPlane::XAtLeast(*it));
      if (!left || !right) continue;
      res.fragments.push_back(std::move(*left));
      res.piece_of.push_back(pi);
      rest = std::move(*right);
    }
    res.fragments.push_back(std::move(rest));
    res.piece_of.push_back(pi);
  }
  return res;
}

long CountEdgeCrossings(const std::vector<Triangle3>& triangles) {
  struct Edge {
    Segment2 s;
    double x0, x1, y0, y1;
    int tri;
  };
  std::vector<Edge> edges;
  for (std::size_t t = 0; t < triangles.size(); ++t)
    for (int e = 0; e < 3; ++e) {
      const Point2 a = Project(triangles[t].Vertex(e)), b = Project(triangles[t].Vertex((e + 1) % 3));
      const double ax = ToDouble(a.x), bx = ToDouble(b.x), ay = ToDouble(a.y), by = ToDouble(b.y);
      edges.push_back({{a, b},
                       std::nextafter(std::min(ax, bx), -HUGE_VAL),
                       std::nextafter(std::max(ax, bx), HUGE_VAL),
                       std::nextafter(std::min(ay, by), -HUGE_VAL),
                       std::nextafter(std::max(ay, by), HUGE_VAL),
                       static_cast<int>(t)});
    }
  std::sort(edges.begin(), edges.end(), [](const Edge& a, const Edge& b) { return a.x0 < b.x0; });
  long K = 0;
  for (std::size_t i = 0; i < edges.size(); ++i)
    for (std::size_t j = i + 1; j < edges.size() && edges[j].x0 <= edges[i].x1; ++j) {
      if (edges[i].tri == edges[j].tri) continue;
      if (edges[j].y1 < edges[i].y0 || edges[i].y1 < edges[j].y0) continue;
      if (SegmentsIntersect2d(edges[i].s, edges[j].s).kind != SegmentIntersection2::Kind::kEmpty) ++K;
    }
  return K;
}

long DefaultTrianglesR(long n) { return CeilNear(std::pow(static_cast<double>(n), 0.75)); }

long KSensitiveR(long n, long K) {
  if (K <= 0) return std::max(1L, n);
  return std::min(CeilNear(std::pow(static_cast<double>(n), 1.25) / std::pow(static_cast<double>(K), 0.25)),
                  std::max(1L, n));
}

long DefaultLinesR(long n) { return CeilNear(std::sqrt(static_cast<double>(n))); }

FragmentationResult CutTriangles(const std::vector<Triangle3>& triangles, const PipelineParams& params) {
  ValidateScene(triangles);
  if (triangles.empty()) {
    FragmentationResult empty;
    empty.stats.oracle_ok = true;
    return empty;
  }
  const long n = static_cast<long>(triangles.size());
  const long r = params.r > 0 ? params.r : DefaultTrianglesR(n);

  auto start = Clock::now();
  std::vector<Line2> lines;
  for (const auto& t : triangles)
    for (const auto& l : EdgeLines(t)) lines.push_back(l);
  const std::vector<CutItem> items = MergeLines(lines);
  std::map<Line2, int> index;
  for (std::size_t i = 0; i < items.size(); ++i) index[items[i].line] = static_cast<int>(i);
  std::vector<std::array<int, 3>> edge_items;
  for (const auto& t : triangles) {
    const auto ls = EdgeLines(t);
    edge_items.push_back({index.at(ls[0]), index.at(ls[1]), index.at(ls[2])});
  }
  const CuttingHierarchy h =
      BuildHierarchy(items, ClipBox(ProjectedVertices(triangles)), r, {params.rho, params.sample_constant, params.seed});
  PipelineStats stats = HierarchyStats(h);
  stats.ms_hierarchy = MsSince(start);
  stats.algorithm = "triangles";
  stats.n = n;
  stats.edges = 3 * n;
  stats.K = CountEdgeCrossings(triangles);
  return RunTwoPhase(triangles, h, edge_items, params, std::move(stats));
}

FragmentationResult CutTrianglesKSensitive(const std::vector<Triangle3>& triangles, const PipelineParams& params) {
  ValidateScene(triangles);
  if (triangles.empty()) {
    FragmentationResult empty;
    empty.stats.oracle_ok = true;
    return empty;
  }
  const long n = static_cast<long>(triangles.size());
  auto start = Clock::now();
  const long K = CountEdgeCrossings(triangles);
  const long r = params.r > 0 ? params.r : KSensitiveR(n, K);
  std::vector<CutItem> items;
  std::vector<std::array<int, 3>> edge_items;
  for (std::size_t t = 0; t < triangles.size(); ++t) {
    std::array<int, 3> mine{};
    for (int e = 0; e < 3; ++e) {
      mine[e] = static_cast<int>(items.size());
      items.push_back(CutItem::FromSegment(Project(triangles[t].Vertex(e)), Project(triangles[t].Vertex((e + 1) % 3))));
    }
    edge_items.push_back(mine);
  }
  const CuttingHierarchy h =
      BuildHierarchy(items, ClipBox(ProjectedVertices(triangles)), r, {params.rho, params.sample_constant, params.seed});
  PipelineStats stats = HierarchyStats(h);
  stats.ms_hierarchy = MsSince(start);
  stats.algorithm = "triangles-k";
  stats.n = n;
  stats.edges = 3 * n;
  stats.K = K;
  return RunTwoPhase(triangles, h, edge_items, params, std::move(stats));
}

namespace {

// Parameter interval of s inside the closed cell; empty when of zero length.
std::optional<std::pair<Rational, Rational>> ClipParams(const Segment3& s, const Cell2& cell) {
  const Point2 a = Project(s.a), b = Project(s.b);
  Rational lo = 0, hi = 1;
  for (const auto& h : cell.sides) {
    const Rational g0 = h.Eval(a), g1 = h.Eval(b);
    if (g0 < 0 && g1 < 0) return std::nullopt;
    if (g0 >= 0 && g1 >= 0) continue;
    const Rational t = g0 / (g0 - g1);
    if (g0 < 0) {
      if (lo < t) lo = t;
    } else if (t < hi) {
      hi = t;
    }
  }
  if (!(lo < hi)) return std::nullopt;
  return std::make_pair(lo, hi);
}

int LocateLeaf(const CuttingHierarchy& h, const Point2& p) {
  if (!h.levels[0].cells[0].trap.ContainsStrictly(p)) return -1;
  int index = 0;
  for (int level = 0; level < h.k(); ++level) {
    int next = -1;
    for (int child : h.levels[level].cells[index].children)
      if (h.levels[level + 1].cells[child].trap.ContainsStrictly(p)) {
        next = child;
        break;
      }
    if (next < 0) return -1;
    index = next;
  }
  return index;
}

}  // namespace

LinesResult CutLines(const std::vector<Segment3>& segments, const PipelineParams& params) {
  LinesResult res;
  std::vector<DepthObject> objs;
  for (std::size_t i = 0; i < segments.size(); ++i) {
    ValidateSegment(segments[i]);
    objs.push_back(DepthObject::FromSegment(segments[i], static_cast<int>(i)));
  }
  if (auto bad = PairwiseDisjoint3d(objs)) {
    const auto c = Classify(objs[bad->first], objs[bad->second]);
    throw DisjointnessViolation(static_cast<int>(bad->first), static_cast<int>(bad->second), c.contact);
  }
  if (segments.empty()) {
    res.stats.oracle_ok = true;
    return res;
  }
  const long n = static_cast<long>(segments.size());
  const long r = params.r > 0 ? params.r : DefaultLinesR(n);

  std::vector<Line2> lines;
  std::vector<Point2> pts;
  for (const auto& s : segments) {
    lines.push_back(Line2::Through(Project(s.a), Project(s.b)));
    pts.push_back(Project(s.a));
    pts.push_back(Project(s.b));
  }
  const std::vector<CutItem> items = MergeLines(lines);
  std::map<Line2, std::vector<int>> on_line;
  for (std::size_t i = 0; i < segments.size(); ++i) on_line[lines[i]].push_back(static_cast<int>(i));
  const CuttingHierarchy h = BuildHierarchy(items, ClipBox(pts), r, {params.rho, params.sample_constant, params.seed});
  res.stats.n = n;
  res.stats.r = r;
  res.stats.k = h.k();

  // Cuts where projections cross cell boundaries.
  CutSet boundary;
  for (const auto& leaf : h.leaves().cells) {
    const Cell2 cell = leaf.trap.ToCell();
    for (int it : leaf.crossing)
      for (int s : on_line.at(items[it].line)) {
        auto range = ClipParams(segments[s], cell);
        if (!range) continue;
        if (range->first > 0) boundary.Add(s, segments[s], range->first, CutProvenance::kTrivial);
        if (range->second < 1) boundary.Add(s, segments[s], range->second, CutProvenance::kTrivial);
      }
  }
  res.stats.boundary_cuts = static_cast<long>(boundary.size());

  // Per-column cut sets; fragments lying on cell walls form one more group.
  const SegmentFragments pieces = ApplyCuts(segments, boundary);
  std::map<int, std::vector<int>> groups;
  for (std::size_t f = 0; f < pieces.pieces.size(); ++f) {
    const auto& p = pieces.pieces[f];
    const Point2 mid{(p.a.x + p.b.x) / 2, (p.a.y + p.b.y) / 2};
    const int leaf = LocateLeaf(h, mid);
    if (leaf < 0) ++res.stats.wall_segments;
    groups[leaf].push_back(static_cast<int>(f));
  }
  res.cuts = boundary;
  for (const auto& [leaf, all] : groups) {
    if (all.size() < 2) continue;
    // Cycles stay inside strongly connected components of the group.
    std::vector<DepthObject> group_objs;
    for (std::size_t i = 0; i < all.size(); ++i)
      group_objs.push_back(DepthObject::FromSegment(pieces.pieces[all[i]], static_cast<int>(i)));
    const DepthGraph g = BuildDepthGraph(group_objs);
    int count = 0;
    const std::vector<int> comp = StronglyConnectedComponents(g, &count);
    std::vector<std::vector<int>> components(count);
    for (std::size_t i = 0; i < all.size(); ++i) components[comp[i]].push_back(all[i]);
    for (std::size_t c = 0; c < components.size(); ++c) {
      const std::vector<int>& members = components[c];
      if (members.size() < 2) continue;
      std::vector<Segment3> local;
      for (int f : members) local.push_back(pieces.pieces[f]);
      const CutSet cs = ComputeCutSet(local, params.strategy, params.seed + static_cast<std::uint64_t>(leaf + 1) + c);
      for (const auto& [i, list] : cs.cuts) {
        const int f = members[i];
        const int parent = pieces.parent[f];
        const auto& [lo, hi] = pieces.range[f];
        for (const auto& cut : list) {
          res.cuts.Add(parent, segments[parent], lo + cut.t * (hi - lo), cut.provenance);
          ++res.stats.column_cuts;
        }
      }
    }
  }
  res.fragments = ApplyCuts(segments, res.cuts);
  res.stats.fragments = static_cast<long>(res.fragments.pieces.size());
  if (params.verify) {
    res.stats.hierarchy_check = VerifyHierarchy(h);
    res.stats.oracle_ok = IsAcyclic(res.fragments.Objects());
  }
  return res;
}

std::vector<ConvexFragment> Triangulate(const std::vector<ConvexFragment>& fragments) {
  std::vector<ConvexFragment> out;
  for (const auto& f : fragments)
    for (auto& t : FanTriangulate(f)) out.push_back(std::move(t));
  return out;
}

bool FragmentsAcyclic(const std::vector<ConvexFragment>& fragments) {
  std::vector<DepthObject> objs;
  objs.reserve(fragments.size());
  for (std::size_t i = 0; i < fragments.size(); ++i) objs.push_back(DepthObject::FromFragment(fragments[i], static_cast<int>(i)));
  return IsAcyclic(objs);
}

const char* ToString(Prop1Verdict v) {
  switch (v) {
    case Prop1Verdict::kHolds: return "holds";
    case Prop1Verdict::kVacuous: return "vacuous";
    case Prop1Verdict::kRejected: return "rejected";
    case Prop1Verdict::kViolated: return "violated";
  }
  return "?";
}

std::vector<Segment3> ColumnEdges(const ColumnContents& column) {
  std::vector<Segment3> edges;
  for (const auto& f : column.fragments) {
    const std::size_t m = f.size();
    for (std::size_t e = 0; e < m; ++e) {
      if (f.edges[e] != EdgeKind::kOriginal) continue;
      const Point2 &a = f.boundary[e], &b = f.boundary[(e + 1) % m];
      if (!column.cell.ContainsStrictly({(a.x + b.x) / 2, (a.y + b.y) / 2})) continue;
      edges.push_back({f.Vertex3(e), f.Vertex3((e + 1) % m), true, true});
    }
  }
  for (const auto& s : column.segments) edges.push_back(s);
  return edges;
}

Prop1Verdict Proposition1Check(const ColumnContents& column, std::string* counterexample) {
  for (const auto& f : column.fragments) {
    const std::size_t m = f.size();
    for (std::size_t v = 0; v < m; ++v)
      if (f.edges[v] == EdgeKind::kOriginal && f.edges[(v + m - 1) % m] == EdgeKind::kOriginal &&
          column.cell.ContainsStrictly(f.boundary[v]))
        return Prop1Verdict::kRejected;
  }
  for (const auto& s : column.segments)
    if (column.cell.ContainsStrictly(Project(s.a)) || column.cell.ContainsStrictly(Project(s.b)))
      return Prop1Verdict::kRejected;

  std::vector<DepthObject> edges;
  for (const auto& e : ColumnEdges(column)) edges.push_back(DepthObject::FromSegment(e, static_cast<int>(edges.size())));
  if (!IsAcyclic(edges)) return Prop1Verdict::kVacuous;

  std::vector<DepthObject> contents;
  for (const auto& f : column.fragments) contents.push_back(DepthObject::FromFragment(f, static_cast<int>(contents.size())));
  for (const auto& s : column.segments) contents.push_back(DepthObject::FromSegment(s, static_cast<int>(contents.size())));
  const auto order = FindDepthOrder(BuildDepthGraph(contents));
  if (order.acyclic) return Prop1Verdict::kHolds;
  if (counterexample) {
    std::ostringstream out;
    out << "cycle:";
    for (int v : order.cycle.nodes) out << ' ' << v;
    out << "\nfragments:\n";
    for (const auto& f : column.fragments) {
      for (const auto& p : f.Boundary3()) out << ' ' << ToString(p);
      out << '\n';
    }
    out << "segments:\n";
    for (const auto& s : column.segments) out << ' ' << ToString(s.a) << ' ' << ToString(s.b) << '\n';
    *counterexample = out.str();
  }
  return Prop1Verdict::kViolated;
}

}  // namespace depthcut
