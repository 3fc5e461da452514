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

#include "depthcut/cutting.hpp"

using namespace depthcut;

namespace {

const Trapezoid kBox{-100, 100, Line2::Horizontal(-100), Line2::Horizontal(100)};

std::vector<CutItem> RandomLines(int n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  auto r = [&] { return Rational(static_cast<long>(rng() % 161) - 80); };
  std::vector<Line2> lines;
  while (static_cast<int>(lines.size()) < n) {
    Point2 p{r(), r()}, q{r(), r()};
    if (p == q) continue;
    lines.push_back(Line2::Through(p, q));
  }
  return MergeLines(lines);
}

// Independent crossing test: a line crosses an open convex polygon iff the
// polygon has vertices strictly on both sides.
int BruteWeight(const std::vector<CutItem>& items, const Trapezoid& t) {
  int w = 0;
  for (const auto& it : items) {
    bool pos = false, neg = false;
    for (const auto& v : t.Vertices()) {
      const int s = sgn(it.line.Eval(v));
      pos |= s > 0;
      neg |= s < 0;
    }
    if (pos && neg) w += it.weight;
  }
  return w;
}

}  // namespace

TEST_CASE("one_level_cutting") {
  auto empty = OneLevelCutting({}, kBox);
  REQUIRE(empty.cells.size() == 1);
  CHECK(empty.cells[0].trap.TwiceArea() == kBox.TwiceArea());

  std::vector<CutItem> one{CutItem::FromLine(Line2::Through({0, 0}, {1, 2}))};
  auto split = OneLevelCutting(one, kBox, {2, 1.0, 7});
  CHECK(split.cells.size() >= 2);
  for (const auto& c : split.cells) CHECK(c.crossing.empty());

  auto lines = RandomLines(32, 1);
  REQUIRE(lines.size() == 32);
  auto level = OneLevelCutting(lines, kBox, {4, 1.0, 3});
  Rational area = 0;
  for (const auto& c : level.cells) {
    CHECK(BruteWeight(lines, c.trap) <= 8);
    CHECK(BruteWeight(lines, c.trap) == c.weight);
    area += c.trap.TwiceArea();
  }
  CHECK(area == kBox.TwiceArea());
}

TEST_CASE("build_hierarchy") {
  auto lines = RandomLines(64, 2);
  auto trivial = BuildHierarchy(lines, kBox, 1);
  CHECK(trivial.k() == 0);
  CHECK(VerifyHierarchy(trivial).empty());

  auto h = BuildHierarchy(lines, kBox, 16, {4, 1.0, 5});
  CHECK(h.k() == 2);
  CHECK(h.levels[1].bound == 16);
  CHECK(h.levels[2].bound == 4);
  CHECK(VerifyHierarchy(h) == "");
  for (int i = 0; i <= h.k(); ++i)
    for (const auto& c : h.levels[i].cells) CHECK(BruteWeight(lines, c.trap) <= h.levels[i].bound);

  // r = n with rho^k > n: the leaves still form a (1/r)-cutting, one line each.
  auto few = RandomLines(20, 4);
  auto full = BuildHierarchy(few, kBox, static_cast<long>(few.size()), {4, 1.0, 9});
  CHECK(VerifyHierarchy(full) == "");
  CHECK(full.k() == 3);
  CHECK(full.leaves().bound == 1);
  for (const auto& c : full.leaves().cells) CHECK(c.crossing.size() <= 1);

  // r between powers of rho: the leaf bound is floor(N / r), not N / rho^k.
  auto mid = BuildHierarchy(lines, kBox, 10, {4, 1.0, 6});
  CHECK(mid.k() == 2);
  CHECK(mid.levels[1].bound == 20);  // floor(64 / sqrt(10))
  CHECK(mid.leaves().bound == 6);
  CHECK(VerifyHierarchy(mid) == "");
}

TEST_CASE("level bounds") {
  // Brute force: the largest b with b^k r^i <= N^k, in exact integers.
  auto brute = [](long n, long r, int i, int k) {
    auto pow = [](long base, int e) {
      mpz_class p = 1;
      for (int j = 0; j < e; ++j) p *= base;
      return p;
    };
    long b = 0;
    while (pow(b + 1, k) * pow(r, i) <= pow(n, k)) ++b;
    return b;
  };
  for (long n : {1L, 7L, 64L, 96L, 384L, 1000L})
    for (long r : {1L, 2L, 3L, 10L, 39L, 64L})
      for (int k = 0; k <= 4; ++k)
        for (int i = 0; i <= k; ++i) {
          CAPTURE(n);
          CAPTURE(r);
          CAPTURE(k);
          CAPTURE(i);
          CHECK(LevelBound(n, r, i, k) == (k == 0 || i == 0 ? n : brute(n, r, i, k)));
        }
  CHECK(LevelBound(768, 64, 3, 3) == 12);
  CHECK(LevelBound(768, 64, 1, 3) == 192);
}

TEST_CASE("hierarchy is deterministic per seed") {
  auto lines = RandomLines(40, 8);
  auto a = BuildHierarchy(lines, kBox, 10, {4, 1.0, 42});
  auto b = BuildHierarchy(lines, kBox, 10, {4, 1.0, 42});
  REQUIRE(a.levels.size() == b.levels.size());
  for (std::size_t i = 0; i < a.levels.size(); ++i) {
    REQUIRE(a.levels[i].cells.size() == b.levels[i].cells.size());
    for (std::size_t c = 0; c < a.levels[i].cells.size(); ++c) {
      CHECK(a.levels[i].cells[c].trap.Vertices() == b.levels[i].cells[c].trap.Vertices());
      CHECK(a.levels[i].cells[c].crossing == b.levels[i].cells[c].crossing);
    }
  }
}

TEST_CASE("duplicate and concurrent lines") {
  std::vector<Line2> raw;
  for (int i = 0; i < 6; ++i) raw.push_back(Line2::Through({0, 0}, {1, Rational(i)}));
  raw.push_back(Line2::Through({0, 0}, {1, 2}));
  raw.push_back(Line2::Vertical(0));
  raw.push_back(Line2::Vertical(3));
  auto items = MergeLines(raw);
  CHECK(items.size() == 8);
  auto h = BuildHierarchy(items, kBox, 9, {2, 1.0, 3});
  CHECK(VerifyHierarchy(h) == "");
}

TEST_CASE("trap_cutting on segments") {
  // Disjoint segments.
  std::vector<CutItem> sparse;
  for (int i = 0; i < 10; ++i) sparse.push_back(CutItem::FromSegment({Rational(i * 10 - 50), 0}, {Rational(i * 10 - 45), 5}));
  auto s = OneLevelCutting(sparse, kBox, {2, 1.0, 1});
  for (const auto& c : s.cells) CHECK(c.weight <= 5);

  std::vector<CutItem> two{CutItem::FromSegment({-10, -10}, {10, 10}), CutItem::FromSegment({-10, 10}, {10, -10})};
  auto t = OneLevelCutting(two, kBox, {2, 1.0, 1});
  for (const auto& c : t.cells) CHECK(c.weight <= 1);

  // sqrt(n) x sqrt(n) grid of segments, rho = sqrt(n).
  std::vector<CutItem> grid;
  for (int i = 0; i < 6; ++i) {
    grid.push_back(CutItem::FromSegment({-50, Rational(i * 10 - 25)}, {50, Rational(i * 10 - 24)}));
    grid.push_back(CutItem::FromSegment({Rational(i * 10 - 25), -50}, {Rational(i * 10 - 24), 50}));
  }
  auto h = BuildHierarchy(grid, kBox, 12, {4, 1.0, 2});
  CHECK(VerifyHierarchy(h) == "");
  long k_total = 0;
  for (const auto& c : h.levels[0].cells) k_total += InteriorIntersections(h.items, c);
  CHECK(k_total == 36);

  // Vertical segments are handled as walls.
  std::vector<CutItem> vertical{CutItem::FromSegment({0, -5}, {0, 5}), CutItem::FromSegment({-5, 0}, {5, 1}),
                                CutItem::FromSegment({2, -9}, {2, 9})};
  auto v = BuildHierarchy(vertical, kBox, 4, {2, 1.0, 4});  // leaf bound floor(3/4) = 0
  CHECK(VerifyHierarchy(v) == "");
  for (const auto& c : v.leaves().cells) CHECK(c.weight == 0);
}

TEST_CASE("segment crossing predicate") {
  const Trapezoid cell{0, 4, Line2::Horizontal(0), Line2::Through({0, 2}, {4, 4})};
  CHECK(CrossesInterior(CutItem::FromSegment({-1, 1}, {5, 1}), cell));
  CHECK_FALSE(CrossesInterior(CutItem::FromSegment({-1, 0}, {5, 0}), cell));   // on the bottom
  CHECK_FALSE(CrossesInterior(CutItem::FromSegment({-2, 1}, {0, 1}), cell));   // ends on the left side
  CHECK(CrossesInterior(CutItem::FromSegment({1, 1}, {2, 1}), cell));          // strictly inside
  CHECK_FALSE(CrossesInterior(CutItem::FromSegment({0, 2}, {4, 4}), cell));    // along the top
  CHECK(CrossesInterior(CutItem::FromSegment({2, -1}, {2, 1}), cell));         // vertical, entering
  CHECK_FALSE(CrossesInterior(CutItem::FromSegment({4, 0}, {4, 9}), cell));    // on the right side
}
