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

#include "depthcut/cutset.hpp"
#include "depthcut/depth_graph.hpp"

using namespace depthcut;

namespace {

// Segment through p and q (z given at both), clipped to parameters [lo, hi].
Segment3 Through(Point3 p, Point3 q, Rational lo = Rational(-1, 10), Rational hi = Rational(11, 10)) {
  Segment3 s{p, q};
  return {s.At(lo), s.At(hi)};
}

// Three segments around the triangle (0,0), (10,0), (5,8), each sloping
// down along its direction: s0 below s1 below s2 below s0.
std::vector<Segment3> Weave3(Rational dx = 0) {
  const Point2 a{dx, 0}, b{dx + 10, 0}, c{dx + 5, 8};
  auto seg = [](Point2 p, Point2 q) { return Through({p.x, p.y, 2}, {q.x, q.y, 0}); };
  return {seg(a, b), seg(b, c), seg(c, a)};
}

std::vector<Segment3> RandomGeneric(int n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  auto r = [&](int m) { return Rational(static_cast<long>(rng() % (2 * m + 1)) - m); };
  for (;;) {
    std::vector<Segment3> out;
    while (static_cast<int>(out.size()) < n) {
      Segment3 s{{r(20), r(20), r(10)}, {r(20), r(20), r(10)}};
      if (Project(s.a) == Project(s.b)) continue;
      out.push_back(s);
    }
    try {
      if (!DetectDegeneracies(out).any()) {
        ComputeCrossingSchedule(out);
        return out;
      }
    } catch (const std::exception&) {
    }
  }
}

// Independent check that same-line spans are nested or interior-disjoint.
bool Laminar(const std::vector<std::pair<Rational, Rational>>& spans) {
  for (std::size_t i = 0; i < spans.size(); ++i)
    for (std::size_t j = 0; j < spans.size(); ++j) {
      const auto &[a0, a1] = spans[i];
      const auto &[b0, b1] = spans[j];
      const bool disjoint = a1 <= b0 || b1 <= a0;
      const bool nested = (a0 <= b0 && b1 <= a1) || (b0 <= a0 && a1 <= b1);
      if (!disjoint && !nested) return false;
    }
  return true;
}

}  // namespace

TEST_CASE("crossing schedule") {
  std::vector<Segment3> two{{{0, 0, 0}, {4, 4, 0}}, {{0, 4, 1}, {4, 0, 1}}};
  auto s = ComputeCrossingSchedule(two);
  CHECK(s.total == 1);
  REQUIRE(s.along[0].size() == 1);
  CHECK(s.along[0][0].t == Rational(1, 2));
  CHECK(s.along[0][0].sign == -1);
  CHECK(s.along[1][0].sign == 1);

  // Lines y = i x + i^2 meet pairwise at distinct points.
  const int k = 6;
  std::vector<Segment3> fan;
  for (int i = 0; i < k; ++i) fan.push_back({{-20, Rational(-20 * i + i * i), Rational(i)}, {20, Rational(20 * i + i * i), Rational(i)}});
  CHECK(ComputeCrossingSchedule(fan).total == k * (k - 1) / 2);

  std::vector<Segment3> parallel{{{0, 0, 0}, {4, 0, 0}}, {{0, 1, 0}, {4, 1, 0}}};
  CHECK(ComputeCrossingSchedule(parallel).total == 0);

  std::vector<Segment3> open_touch{{{0, 0, 0}, {2, 0, 0}, false, true}, {{2, -1, 1}, {2, 1, 1}}};
  CHECK(ComputeCrossingSchedule(open_touch).total == 0);

  std::vector<Segment3> overlap{{{0, 0, 0}, {4, 0, 0}}, {{2, 0, 1}, {6, 0, 1}}};
  CHECK_THROWS_AS(ComputeCrossingSchedule(overlap), DegenerateInput);
}

TEST_CASE("trivial, greedy and exact on the weave") {
  const auto w = Weave3();
  CHECK_FALSE(IsAcyclic(ApplyCuts(w, {}).Objects()));
  const auto trivial = TrivialCutSet(w, ComputeCrossingSchedule(w));
  CHECK(trivial.size() == 6);
  CHECK(IsComplete(w, trivial));

  const auto greedy = GreedyCutSet(w);
  CHECK(greedy.size() == 1);
  CHECK(IsComplete(w, greedy));

  const auto exact = ExactSmallCutSet(w);
  CHECK(exact.size() == 1);
  CHECK(IsComplete(w, exact));

  auto two = Weave3();
  for (const auto& s : Weave3(100)) two.push_back(s);
  CHECK(ExactSmallCutSet(two).size() == 2);
  CHECK(GreedyCutSet(two).size() == 2);

  std::vector<Segment3> stacked{{{0, 0, 0}, {4, 4, 0}}, {{0, 4, 1}, {4, 0, 1}}, {{2, -1, 2}, {2, 5, 2}}};
  CHECK(GreedyCutSet(stacked).size() == 0);
  CHECK(ExactSmallCutSet(stacked).size() == 0);
}

TEST_CASE("exact budget") {
  auto many = Weave3();
  for (int i = 1; i < 6; ++i)
    for (const auto& s : Weave3(Rational(100 * i))) many.push_back(s);
  CHECK_THROWS_AS(ExactSmallCutSet(many, 4), BudgetExceeded);
}

TEST_CASE("cut at a segment endpoint only opens it") {
  std::vector<Segment3> one{{{0, 0, 0}, {4, 0, 0}}};
  CutSet cs;
  cs.Add(0, one[0], 0, CutProvenance::kGreedy);
  cs.Add(0, one[0], Rational(1, 2), CutProvenance::kGreedy);
  auto f = ApplyCuts(one, cs);
  REQUIRE(f.pieces.size() == 2);
  CHECK(f.pieces[0].open_a);
  CHECK(f.pieces[0].open_b);
  CHECK(f.pieces[1].open_a);
  CHECK_FALSE(f.pieces[1].open_b);
}

TEST_CASE("degeneracy normalization") {
  const auto w = Weave3();
  CHECK_FALSE(DetectDegeneracies(w).any());
  auto id = DegeneracyNormalize(w);
  CHECK(id.identity());

  std::vector<Segment3> overlap{{{0, 0, 0}, {4, 0, 0}}, {{2, 0, 1}, {6, 0, 1}}, {{3, -2, 5}, {3, 2, -4}}};
  auto rep = DetectDegeneracies(overlap);
  CHECK(rep.parallel_overlap);
  auto m = DegeneracyNormalize(overlap, 3);
  CHECK_FALSE(m.identity());
  CHECK(VerifyPerturbation(m) == "");

  std::vector<Segment3> concurrent{{{-2, 0, 0}, {2, 0, 0}}, {{0, -2, 1}, {0, 2, 1}}, {{-2, -2, 2}, {2, 2, 2}}};
  CHECK(DetectDegeneracies(concurrent).concurrent);
  CHECK(VerifyPerturbation(DegeneracyNormalize(concurrent, 5)) == "");

  std::vector<Segment3> touching{{{0, 0, 0}, {2, 0, 0}}, {{2, -1, 1}, {2, 1, 1}}};
  CHECK(DetectDegeneracies(touching).endpoint_on_segment);
  auto t = DegeneracyNormalize(touching, 7);
  CHECK(VerifyPerturbation(t) == "");
  CHECK(ComputeCrossingSchedule(t.perturbed).total == 1);
}

TEST_CASE("map back snaps to crossings") {
  const auto w = Weave3();
  const auto id = DegeneracyNormalize(w);
  const auto sched = ComputeCrossingSchedule(w);
  CutSet gap;
  gap.Add(0, w[0], Rational(1, 2), CutProvenance::kGreedy);
  const auto back = MapBackCuts(gap, id);
  REQUIRE(back.size() == 1);
  const Rational t = back.cuts.at(0)[0].t;
  bool on_crossing = false;
  for (const auto& c : sched.along[0]) on_crossing |= c.t == t;
  CHECK(on_crossing);

  std::vector<Segment3> lonely{{{0, 0, 0}, {1, 0, 0}}};
  CutSet cut;
  cut.Add(0, lonely[0], Rational(1, 2), CutProvenance::kGreedy);
  CHECK(MapBackCuts(cut, DegeneracyNormalize(lonely)).size() == 0);
}

TEST_CASE("segment tree cuts") {
  std::vector<Segment3> pair{{{0, 0, 0}, {2, 0, 0}}, {{1, 0, 1}, {3, 0, 1}}};
  const auto y = SegmentTreeCuts(pair, ApplyCuts(pair, {}));
  CHECK(y.size() == 1);
  const auto frags = ApplyCuts(pair, y);
  std::vector<std::pair<Rational, Rational>> spans;
  for (const auto& p : frags.pieces) spans.emplace_back(std::min(p.a.x, p.b.x), std::max(p.a.x, p.b.x));
  CHECK(Laminar(spans));
  CHECK(IsComplete(pair, y));

  std::mt19937_64 rng(11);
  std::vector<Segment3> stack;
  for (int i = 0; i < 8; ++i) {
    Rational a = static_cast<long>(rng() % 30), b = a + 1 + static_cast<long>(rng() % 20);
    stack.push_back({{a, a, Rational(i)}, {b, b, Rational(i)}});
  }
  const auto ys = SegmentTreeCuts(stack, ApplyCuts(stack, {}));
  const auto fs = ApplyCuts(stack, ys);
  std::vector<std::pair<Rational, Rational>> sp;
  for (const auto& p : fs.pieces) sp.emplace_back(p.a.x, p.b.x);
  CHECK(Laminar(sp));
  CHECK(ys.size() <= 8 * 2 * 5);

  // Vertical lines use y coordinates.
  std::vector<Segment3> vertical{{{0, 0, 0}, {0, 2, 0}}, {{0, 1, 1}, {0, 3, 1}}};
  CHECK(SegmentTreeCuts(vertical, ApplyCuts(vertical, {})).size() == 1);
}

TEST_CASE("degenerate route") {
  // The weave with s0 ending exactly on s1.
  auto w = Weave3();
  w[0] = Through({0, 0, 2}, {10, 0, 0}, Rational(-1, 10), 1);
  REQUIRE(DetectDegeneracies(w).endpoint_on_segment);
  for (auto strategy : {CutStrategy::kTrivial, CutStrategy::kGreedy, CutStrategy::kExact}) {
    auto r = CompleteCutSetDegenerate(w, strategy, 2);
    CHECK(r.complete);
    bool degenerate = false;
    auto cs = ComputeCutSet(w, strategy, 2, &degenerate);
    CHECK(degenerate);
    CHECK(IsComplete(w, cs));
  }

  // Generic input through the degenerate route: the identity map, no Y cuts.
  auto g = CompleteCutSetDegenerate(Weave3(), CutStrategy::kGreedy);
  CHECK(g.map.identity());
  CHECK(g.x.size() == 1);
  CHECK(g.y.size() == 0);
  CHECK(g.complete);

  // Stacked collinear overlaps plus a cyclic weave.
  auto mixed = Weave3();
  mixed.push_back({{-5, -3, 0}, {5, -3, 0}});
  mixed.push_back({{0, -3, 1}, {8, -3, 1}});
  mixed.push_back({{1, -6, 3}, {1, 0, -2}});
  auto res = ComputeCutSet(mixed, CutStrategy::kGreedy, 4);
  CHECK(IsComplete(mixed, res));
}

TEST_CASE("cut set properties on random inputs") {
  for (std::uint64_t seed = 1; seed <= 12; ++seed) {
    const auto segs = RandomGeneric(7, seed);
    const auto sched = ComputeCrossingSchedule(segs);
    const auto trivial = TrivialCutSet(segs, sched);
    const auto greedy = GreedyCutSet(segs);
    CHECK(IsComplete(segs, trivial));
    CHECK(IsComplete(segs, greedy));
    CHECK(greedy.size() <= trivial.size());
    if (GapCandidates(sched).size() <= 16) {
      const auto exact = ExactSmallCutSet(segs, 16);
      CHECK(IsComplete(segs, exact));
      CHECK(exact.size() <= greedy.size());
    }
    // Any superset of a complete cut set is complete.
    CutSet more = greedy;
    for (const auto& [i, t] : GapCandidates(sched)) {
      more.Add(i, segs[i], t, CutProvenance::kGreedy);
      CHECK(IsComplete(segs, more));
    }
  }
}
