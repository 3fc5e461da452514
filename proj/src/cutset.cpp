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

#include "depthcut/cutset.hpp"

#include <algorithm>
#include <functional>
#include <random>
#include <set>
#include <sstream>

#include "depthcut/depth_graph.hpp"

namespace depthcut {

namespace {

bool MemberOf(const Segment3& s, const Point2& p) {
  if (s.open_a && p == Project(s.a)) return false;
  if (s.open_b && p == Project(s.b)) return false;
  return true;
}

Rational Abs(const Rational& q) { return q < 0 ? Rational(-q) : q; }

bool ParallelProjections(const Segment3& s, const Segment3& t) {
  return (s.b.x - s.a.x) * (t.b.y - t.a.y) == (s.b.y - s.a.y) * (t.b.x - t.a.x);
}

struct LexCompare {
  bool operator()(const Point2& p, const Point2& q) const { return LexLess(p, q); }
};

}  // namespace

const char* ToString(CutProvenance p) {
  switch (p) {
    case CutProvenance::kTrivial: return "trivial";
    case CutProvenance::kGreedy: return "greedy";
    case CutProvenance::kExact: return "exact";
    case CutProvenance::kMapped: return "mapped";
    case CutProvenance::kSegTree: return "segtree";
  }
  return "?";
}

const char* ToString(CutStrategy s) {
  switch (s) {
    case CutStrategy::kTrivial: return "trivial";
    case CutStrategy::kGreedy: return "greedy";
    case CutStrategy::kExact: return "exact";
  }
  return "?";
}

CutStrategy ParseStrategy(const std::string& name) {
  if (name == "trivial") return CutStrategy::kTrivial;
  if (name == "greedy") return CutStrategy::kGreedy;
  if (name == "exact" || name == "exact-small") return CutStrategy::kExact;
  throw std::invalid_argument("unknown cut strategy '" + name + "'");
}

void CutSet::Add(int index, const Segment3& s, const Rational& t, CutProvenance provenance) {
  auto& list = cuts[index];
  auto it = std::lower_bound(list.begin(), list.end(), t, [](const CutPoint& c, const Rational& v) { return c.t < v; });
  if (it != list.end() && it->t == t) return;
  list.insert(it, CutPoint{t, s.At(t), provenance});
}

void CutSet::Merge(const CutSet& other, const std::vector<Segment3>& segments) {
  for (const auto& [i, list] : other.cuts)
    for (const auto& c : list) Add(i, segments[i], c.t, c.provenance);
}

std::size_t CutSet::size() const {
  std::size_t n = 0;
  for (const auto& [i, list] : cuts) n += list.size();
  return n;
}

bool CutSet::Contains(int index, const Rational& t) const {
  auto it = cuts.find(index);
  if (it == cuts.end()) return false;
  return std::any_of(it->second.begin(), it->second.end(), [&](const CutPoint& c) { return c.t == t; });
}

DegenerateInput::DegenerateInput(int a, int b)
    : std::invalid_argument("segments " + std::to_string(a) + " and " + std::to_string(b) +
                            " overlap in projection"),
      a(a),
      b(b) {}

CrossingSchedule ComputeCrossingSchedule(const std::vector<Segment3>& segments) {
  CrossingSchedule sched;
  sched.along.resize(segments.size());
  std::vector<DepthObject> objs;
  for (std::size_t i = 0; i < segments.size(); ++i) objs.push_back(DepthObject::FromSegment(segments[i], static_cast<int>(i)));
  for (const auto& [i, j] : CandidatePairs(objs)) {
    const Segment3 &s = segments[i], &t = segments[j];
    const auto hit = SegmentsIntersect2d(s.Projected(), t.Projected());
    if (hit.kind == SegmentIntersection2::Kind::kEmpty) continue;
    if (hit.kind == SegmentIntersection2::Kind::kOverlap) {
      // Collinear contact through a single shared open endpoint is harmless.
      throw DegenerateInput(static_cast<int>(i), static_cast<int>(j));
    }
    const Point2& p = hit.p;
    if (!MemberOf(s, p) || !MemberOf(t, p)) continue;
    const Rational ts = s.ParamOf(p), tt = t.ParamOf(p);
    const int sign = sgn(s.At(ts).z - t.At(tt).z);
    if (sign == 0) throw DisjointnessViolation(static_cast<int>(i), static_cast<int>(j), p);
    sched.along[i].push_back({ts, static_cast<int>(j), tt, sign, p});
    sched.along[j].push_back({tt, static_cast<int>(i), ts, -sign, p});
    ++sched.total;
  }
  for (auto& list : sched.along)
    std::sort(list.begin(), list.end(), [](const Crossing& a, const Crossing& b) {
      return a.t < b.t || (a.t == b.t && a.partner < b.partner);
    });
  return sched;
}

std::vector<DepthObject> SegmentFragments::Objects() const {
  std::vector<DepthObject> out;
  out.reserve(pieces.size());
  for (std::size_t i = 0; i < pieces.size(); ++i) out.push_back(DepthObject::FromSegment(pieces[i], static_cast<int>(i)));
  return out;
}

SegmentFragments ApplyCuts(const std::vector<Segment3>& segments, const CutSet& cuts) {
  SegmentFragments out;
  for (std::size_t i = 0; i < segments.size(); ++i) {
    const Segment3& s = segments[i];
    std::vector<Rational> bounds{0};
    auto it = cuts.cuts.find(static_cast<int>(i));
    if (it != cuts.cuts.end())
      for (const auto& c : it->second) bounds.push_back(c.t);
    bounds.push_back(1);
    for (std::size_t k = 0; k + 1 < bounds.size(); ++k) {
      const Rational &lo = bounds[k], &hi = bounds[k + 1];
      if (lo >= hi) continue;
      Segment3 piece{s.At(lo), s.At(hi), true, true};
      // A cut exactly at an endpoint only opens that endpoint.
      if (lo == 0) piece.open_a = s.open_a || (bounds.size() > 2 && bounds[1] == 0);
      if (hi == 1) piece.open_b = s.open_b || (bounds.size() > 2 && bounds[bounds.size() - 2] == 1);
      out.pieces.push_back(piece);
      out.parent.push_back(static_cast<int>(i));
      out.range.emplace_back(lo, hi);
    }
  }
  return out;
}

bool IsComplete(const std::vector<Segment3>& segments, const CutSet& cuts) {
  return IsAcyclic(ApplyCuts(segments, cuts).Objects());
}

CutSet TrivialCutSet(const std::vector<Segment3>& segments, const CrossingSchedule& schedule) {
  CutSet cs;
  for (std::size_t i = 0; i < schedule.along.size(); ++i)
    for (const auto& c : schedule.along[i]) cs.Add(static_cast<int>(i), segments[i], c.t, CutProvenance::kTrivial);
  return cs;
}

std::vector<std::pair<int, Rational>> GapCandidates(const CrossingSchedule& schedule) {
  std::vector<std::pair<int, Rational>> out;
  for (std::size_t i = 0; i < schedule.along.size(); ++i) {
    const auto& list = schedule.along[i];
    for (std::size_t k = 0; k + 1 < list.size(); ++k)
      if (list[k].t < list[k + 1].t) out.emplace_back(static_cast<int>(i), (list[k].t + list[k + 1].t) / 2);
  }
  return out;
}

CutSet GreedyCutSet(const std::vector<Segment3>& segments) {
  const CrossingSchedule sched = ComputeCrossingSchedule(segments);
  CutSet cs;
  // Every round separates two crossings on one segment, so the number of
  // rounds is bounded by the number of gaps.
  const std::size_t cap = GapCandidates(sched).size() + 1;
  for (std::size_t round = 0; round <= cap; ++round) {
    const SegmentFragments frags = ApplyCuts(segments, cs);
    const DepthGraph g = BuildDepthGraph(frags.Objects());
    if (FindDepthOrder(g).acyclic) return cs;
    const DepthCycle cycle = MinimalCycle(g);
    const std::size_t k = cycle.nodes.size();

    auto crossings_on = [&](int f) {
      const int s = frags.parent[f];
      const auto& [lo, hi] = frags.range[f];
      std::vector<Rational> ts;
      for (const auto& c : sched.along[s])
        if (lo <= c.t && c.t <= hi) ts.push_back(c.t);
      return ts;
    };
    std::size_t best = 0;
    std::size_t best_count = 0;
    for (std::size_t p = 0; p < k; ++p) {
      const std::size_t count = crossings_on(cycle.nodes[p]).size();
      if (p == 0 || count > best_count || (count == best_count && cycle.nodes[p] < cycle.nodes[best])) {
        best = p;
        best_count = count;
      }
    }
    const int f = cycle.nodes[best];
    const int s = frags.parent[f];
    Rational t1 = segments[s].ParamOf(cycle.witnesses[(best + k - 1) % k]);
    Rational t2 = segments[s].ParamOf(cycle.witnesses[best]);
    if (t2 < t1) std::swap(t1, t2);
    std::vector<Rational> stops{t1};
    for (const auto& c : sched.along[s])
      if (t1 < c.t && c.t < t2) stops.push_back(c.t);
    stops.push_back(t2);
    const std::vector<Rational> mine = crossings_on(f);
    const Rational median = mine.empty() ? Rational((t1 + t2) / 2) : mine[(mine.size() - 1) / 2];
    Rational chosen;
    bool have = false;
    for (std::size_t q = 0; q + 1 < stops.size(); ++q) {
      if (!(stops[q] < stops[q + 1])) continue;
      const Rational mid = (stops[q] + stops[q + 1]) / 2;
      if (!have || Abs(mid - median) < Abs(chosen - median)) {
        chosen = mid;
        have = true;
      }
    }
    if (!have) throw std::runtime_error("greedy cut: cycle witnesses coincide (degenerate input)");
    cs.Add(s, segments[s], chosen, CutProvenance::kGreedy);
  }
  throw std::runtime_error("greedy cut set did not converge");
}

CutSet ExactSmallCutSet(const std::vector<Segment3>& segments, int max_candidates) {
  const CrossingSchedule sched = ComputeCrossingSchedule(segments);
  const auto candidates = GapCandidates(sched);
  if (static_cast<int>(candidates.size()) > max_candidates)
    throw BudgetExceeded("exact cut set: " + std::to_string(candidates.size()) + " candidates exceed budget " +
                         std::to_string(max_candidates));
  const CutSet greedy = GreedyCutSet(segments);
  const int n = static_cast<int>(candidates.size());
  std::vector<int> pick;
  std::function<bool(int, int, CutSet&)> search = [&](int start, int left, CutSet& out) {
    if (left == 0) {
      CutSet cs;
      for (int c : pick) cs.Add(candidates[c].first, segments[candidates[c].first], candidates[c].second, CutProvenance::kExact);
      if (!IsComplete(segments, cs)) return false;
      out = cs;
      return true;
    }
    for (int c = start; c <= n - left; ++c) {
      pick.push_back(c);
      if (search(c + 1, left - 1, out)) return true;
      pick.pop_back();
    }
    return false;
  };
  for (int size = 0; size < static_cast<int>(greedy.size()); ++size) {
    CutSet found;
    pick.clear();
    if (search(0, size, found)) return found;
  }
  CutSet relabeled;
  for (const auto& [i, list] : greedy.cuts)
    for (const auto& c : list) relabeled.Add(i, segments[i], c.t, CutProvenance::kExact);
  return relabeled;
}

DegeneracyReport DetectDegeneracies(const std::vector<Segment3>& segments) {
  DegeneracyReport rep;
  std::map<Point2, std::set<int>, LexCompare> contacts;
  std::vector<DepthObject> objs;
  for (std::size_t i = 0; i < segments.size(); ++i) objs.push_back(DepthObject::FromSegment(segments[i], static_cast<int>(i)));
  for (const auto& [i, j] : CandidatePairs(objs)) {
    const Segment3 &s = segments[i], &t = segments[j];
    const auto hit = SegmentsIntersect2d(s.Projected(), t.Projected());
    if (hit.kind == SegmentIntersection2::Kind::kEmpty) continue;
    if (hit.kind == SegmentIntersection2::Kind::kOverlap) {
      rep.parallel_overlap = true;
      continue;
    }
    const Point2& p = hit.p;
    if (!MemberOf(s, p) || !MemberOf(t, p)) continue;
    if (p == Project(s.a) || p == Project(s.b) || p == Project(t.a) || p == Project(t.b)) rep.endpoint_on_segment = true;
    contacts[p].insert(static_cast<int>(i));
    contacts[p].insert(static_cast<int>(j));
  }
  for (const auto& [p, who] : contacts)
    if (who.size() >= 3) rep.concurrent = true;
  return rep;
}

namespace {

std::vector<Segment3> Perturb(const std::vector<Segment3>& segments, const std::vector<Point3>& dirs,
                              const Rational& eps, const Rational& stretch) {
  std::vector<Segment3> out;
  out.reserve(segments.size());
  for (std::size_t i = 0; i < segments.size(); ++i) {
    const Segment3& s = segments[i];
    const Point3 d{s.b.x - s.a.x, s.b.y - s.a.y, s.b.z - s.a.z};
    const Rational ea = s.open_a ? stretch : Rational(-stretch);
    const Rational eb = s.open_b ? Rational(-stretch) : stretch;
    Segment3 p = s;
    p.a = {s.a.x + ea * d.x + eps * dirs[i].x, s.a.y + ea * d.y + eps * dirs[i].y, s.a.z + ea * d.z + eps * dirs[i].z};
    p.b = {s.b.x + eb * d.x + eps * dirs[i].x, s.b.y + eb * d.y + eps * dirs[i].y, s.b.z + eb * d.z + eps * dirs[i].z};
    out.push_back(p);
  }
  return out;
}

}  // namespace

std::string VerifyPerturbation(const PerturbationMap& map) {
  std::ostringstream err;
  const auto& s = map.original;
  const auto& sp = map.perturbed;
  if (DetectDegeneracies(sp).any()) err << "perturbed set is still degenerate\n";
  CrossingSchedule sched;
  try {
    sched = ComputeCrossingSchedule(sp);
  } catch (const std::exception& e) {
    err << "perturbed set invalid: " << e.what() << "\n";
    return err.str();
  }
  const std::size_t n = s.size();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const bool parallel = ParallelProjections(s[i], s[j]);
      if (parallel) {
        if (SegmentsIntersect2d(sp[i].Projected(), sp[j].Projected()).kind != SegmentIntersection2::Kind::kEmpty)
          err << "parallel pair " << i << "," << j << " still meets in projection\n";
        continue;
      }
      const auto a = DepthObject::FromSegment(s[i], 0), b = DepthObject::FromSegment(s[j], 1);
      const auto ap = DepthObject::FromSegment(sp[i], 0), bp = DepthObject::FromSegment(sp[j], 1);
      if (Classify(a, b).below.relation != Classify(ap, bp).below.relation)
        err << "relation of " << i << "," << j << " changed\n";
    }
  }
  // Crossing order along each segment, weakly preserved.
  for (std::size_t i = 0; i < n; ++i) {
    Rational last = -1;
    for (const auto& c : sched.along[i]) {
      const auto hit = SegmentsIntersect2d(s[i].Projected(), s[c.partner].Projected());
      if (hit.kind != SegmentIntersection2::Kind::kPoint) {
        err << "crossing " << i << "," << c.partner << " has no original counterpart\n";
        continue;
      }
      const Rational t = s[i].ParamOf(hit.p);
      if (t < last) err << "crossing order along " << i << " not preserved\n";
      last = t;
    }
  }
  return err.str();
}

PerturbationMap DegeneracyNormalize(const std::vector<Segment3>& segments, std::uint64_t seed) {
  PerturbationMap map;
  map.original = segments;
  map.perturbed = segments;
  map.epsilon = 0;
  if (!DetectDegeneracies(segments).any()) return map;

  Rational lo_x = segments[0].a.x, hi_x = lo_x, lo_y = segments[0].a.y, hi_y = lo_y;
  for (const auto& s : segments)
    for (const Point3* p : {&s.a, &s.b}) {
      lo_x = std::min(lo_x, p->x);
      hi_x = std::max(hi_x, p->x);
      lo_y = std::min(lo_y, p->y);
      hi_y = std::max(hi_y, p->y);
    }
  Rational extent = std::max(hi_x - lo_x, hi_y - lo_y);
  if (extent == 0) extent = 1;

  std::mt19937_64 rng(seed);
  auto unit = [&] {
    long v = 0;
    while (v == 0) v = static_cast<long>(rng() % 2049) - 1024;
    return Rational(Rational(v) / 1024);
  };
  std::vector<Point3> dirs;
  for (std::size_t i = 0; i < segments.size(); ++i) dirs.push_back({unit(), unit(), unit()});

  // Ends move by eps of the segment length, the translation only by eps^2,
  // so for small eps end contacts resolve the same way at every angle.
  Rational eps(1, 64);
  std::string last;
  for (int attempt = 1; attempt <= 64; ++attempt, eps /= 2) {
    map.attempts = attempt;
    map.epsilon = eps;
    map.perturbed = Perturb(segments, dirs, eps * eps * extent, eps);
    last = VerifyPerturbation(map);
    if (last.empty()) return map;
  }
  throw std::runtime_error("degeneracy normalization did not converge: " + last);
}

CutSet MapBackCuts(const CutSet& perturbed_cuts, const PerturbationMap& map) {
  CutSet out;
  const CrossingSchedule sched = ComputeCrossingSchedule(map.perturbed);
  for (const auto& [i, list] : perturbed_cuts.cuts) {
    const auto& crossings = sched.along[i];
    if (crossings.empty()) continue;
    for (const auto& cut : list) {
      const Crossing* nearest = nullptr;
      for (const auto& c : crossings)
        if (!nearest || Abs(c.t - cut.t) < Abs(nearest->t - cut.t)) nearest = &c;
      const auto hit = SegmentsIntersect2d(map.original[i].Projected(), map.original[nearest->partner].Projected());
      if (hit.kind != SegmentIntersection2::Kind::kPoint) continue;
      out.Add(i, map.original[i], map.original[i].ParamOf(hit.p), CutProvenance::kMapped);
    }
  }
  return out;
}

namespace {

// Canonical segment-tree decomposition of leaf range [a, b) within node
// [lo, hi); appends the boundaries between consecutive canonical nodes.
void Canonical(int lo, int hi, int a, int b, std::vector<std::pair<int, int>>& nodes) {
  if (b <= lo || hi <= a) return;
  if (a <= lo && hi <= b) {
    nodes.emplace_back(lo, hi);
    return;
  }
  const int mid = (lo + hi) / 2;
  Canonical(lo, mid, a, b, nodes);
  Canonical(mid, hi, a, b, nodes);
}

}  // namespace

CutSet SegmentTreeCuts(const std::vector<Segment3>& segments, const SegmentFragments& fragments) {
  CutSet out;
  // Group fragments by supporting projected line.
  std::map<Line2, std::vector<int>> groups;
  for (std::size_t f = 0; f < fragments.pieces.size(); ++f) {
    const auto& p = fragments.pieces[f];
    groups[Line2::Through(Project(p.a), Project(p.b))].push_back(static_cast<int>(f));
  }
  for (const auto& [line, members] : groups) {
    if (members.size() < 2) continue;
    const bool use_x = !line.IsVertical();
    auto coord = [&](const Point3& p) { return use_x ? p.x : p.y; };
    struct Span {
      Rational lo, hi;
      int f;
    };
    std::vector<Span> spans;
    for (int f : members) {
      const auto& p = fragments.pieces[f];
      spans.push_back({std::min(coord(p.a), coord(p.b)), std::max(coord(p.a), coord(p.b)), f});
    }
    std::sort(spans.begin(), spans.end(), [](const Span& a, const Span& b) { return a.lo < b.lo; });
    // Components of interior-overlapping spans.
    std::size_t start = 0;
    while (start < spans.size()) {
      std::size_t end = start + 1;
      Rational reach = spans[start].hi;
      while (end < spans.size() && spans[end].lo < reach) {
        reach = std::max(reach, spans[end].hi);
        ++end;
      }
      if (end - start >= 2) {
        std::vector<Rational> coords;
        for (std::size_t k = start; k < end; ++k) {
          coords.push_back(spans[k].lo);
          coords.push_back(spans[k].hi);
        }
        std::sort(coords.begin(), coords.end());
        coords.erase(std::unique(coords.begin(), coords.end()), coords.end());
        const int leaves = static_cast<int>(coords.size()) - 1;
        for (std::size_t k = start; k < end; ++k) {
          const int a = static_cast<int>(std::lower_bound(coords.begin(), coords.end(), spans[k].lo) - coords.begin());
          const int b = static_cast<int>(std::lower_bound(coords.begin(), coords.end(), spans[k].hi) - coords.begin());
          std::vector<std::pair<int, int>> nodes;
          Canonical(0, leaves, a, b, nodes);
          const int f = spans[k].f;
          const int s = fragments.parent[f];
          const Segment3& seg = segments[s];
          for (std::size_t q = 0; q + 1 < nodes.size(); ++q) {
            const Rational& u = coords[nodes[q].second];
            const Rational t = use_x ? (u - seg.a.x) / (seg.b.x - seg.a.x) : (u - seg.a.y) / (seg.b.y - seg.a.y);
            out.Add(s, seg, t, CutProvenance::kSegTree);
          }
        }
      }
      start = end;
    }
  }
  return out;
}

namespace {

CutSet RunStrategy(const std::vector<Segment3>& segments, CutStrategy strategy) {
  switch (strategy) {
    case CutStrategy::kTrivial: return TrivialCutSet(segments, ComputeCrossingSchedule(segments));
    case CutStrategy::kGreedy: return GreedyCutSet(segments);
    case CutStrategy::kExact: return ExactSmallCutSet(segments);
  }
  return {};
}

}  // namespace

DegenerateCutResult CompleteCutSetDegenerate(const std::vector<Segment3>& segments, CutStrategy strategy,
                                             std::uint64_t seed) {
  DegenerateCutResult r;
  r.map = DegeneracyNormalize(segments, seed);
  const CutSet xp = RunStrategy(r.map.perturbed, strategy);
  r.x = MapBackCuts(xp, r.map);
  r.y = SegmentTreeCuts(segments, ApplyCuts(segments, r.x));
  r.combined = r.x;
  r.combined.Merge(r.y, segments);
  r.complete = IsComplete(segments, r.combined);
  return r;
}

CutSet ComputeCutSet(const std::vector<Segment3>& segments, CutStrategy strategy, std::uint64_t seed,
                     bool* used_degenerate_route) {
  const bool degenerate = DetectDegeneracies(segments).any();
  if (used_degenerate_route) *used_degenerate_route = degenerate;
  if (!degenerate) {
    CutSet cs = RunStrategy(segments, strategy);
    if (!IsComplete(segments, cs)) throw std::runtime_error("cut set failed the acyclicity oracle");
    return cs;
  }
  DegenerateCutResult r = CompleteCutSetDegenerate(segments, strategy, seed);
  if (!r.complete) throw std::runtime_error("degenerate cut set failed the acyclicity oracle");
  return r.combined;
}

}  // namespace depthcut
