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

#include <cstdint>
#include <string>
#include <vector>

#include "depthcut/polygon.hpp"

namespace depthcut {

/// Planar cell {xl <= x <= xr, bottom(x) <= y <= top(x)} bounded by two
/// vertical sides and two non-vertical lines. One vertical side may have
/// zero length (a triangle).
struct Trapezoid {
  Rational xl, xr;
  Line2 bottom, top;

  std::vector<Point2> Vertices() const;  // counter-clockwise, no duplicates
  Cell2 ToCell() const;
  Rational TwiceArea() const;
  Point2 InteriorPoint() const;
  bool ContainsStrictly(const Point2& p) const;
};

/// Input to a cutting: a line (unbounded) or a segment, with a multiplicity.
/// Identical lines are merged with their weights added.
struct CutItem {
  Line2 line;
  bool bounded = false;
  Point2 a, b;  // segment endpoints, a lexicographically first
  int weight = 1;

  static CutItem FromLine(const Line2& l, int weight = 1);
  static CutItem FromSegment(const Point2& p, const Point2& q);
};

bool CrossesInterior(const CutItem& item, const Trapezoid& cell);

struct CuttingCell {
  Trapezoid trap;
  std::vector<int> crossing;  // item indices crossing the interior, ascending
  int weight = 0;             // summed item weights of `crossing`
  int parent = -1;            // index into the previous level
  std::vector<int> children;  // indices into the next level
  std::uint64_t seed = 0;
};

struct CuttingLevel {
  int index = 0;
  long bound = 0;  // max crossing weight allowed per cell
  std::vector<CuttingCell> cells;
};

struct CuttingParams {
  int rho = 4;
  /// Sample size s = ceil(A * rho' * ln rho') for effective ratio rho'.
  double sample_constant = 1.0;
  std::uint64_t seed = 1;
};

/// Efficient hierarchical cutting: level 0 is the root box and the last level
/// k satisfies rho^(k-1) < r <= rho^k. Levels use the ratio r^(1/k), which is
/// at most rho, so level i bounds every cell's crossing weight by
/// floor(N / r^(i/k)) and the leaves form a (1/r)-cutting; N is the total
/// item weight.
struct CuttingHierarchy {
  std::vector<CutItem> items;
  std::vector<CuttingLevel> levels;
  Trapezoid root;
  int rho = 4;
  long r = 1;
  long total_weight = 0;
  int max_children = 1;       // the observed refinement constant c
  long resamples = 0;         // decompositions that needed another round

  int k() const { return static_cast<int>(levels.size()) - 1; }
  const CuttingLevel& leaves() const { return levels.back(); }
};

/// Root cell 3x the projected extent of `points`, centred on it.
Trapezoid ClipBox(const std::vector<Point2>& points);

/// Lines with their multiplicities; duplicates merged.
std::vector<CutItem> MergeLines(const std::vector<Line2>& lines);

/// Vertical decomposition of `cell` by the sample items.
std::vector<Trapezoid> Decompose(const Trapezoid& cell, const std::vector<const CutItem*>& sample);

/// A single refinement: cells covering `within`, each crossed by items of
/// total weight <= floor(W / rho), W the weight crossing `within`.
CuttingLevel OneLevelCutting(const std::vector<CutItem>& items, const Trapezoid& within,
                             const CuttingParams& params = {});

/// floor(N / r^(i/k)), exactly: the largest b with b^k r^i <= N^k.
long LevelBound(long total_weight, long r, int i, int k);

CuttingHierarchy BuildHierarchy(const std::vector<CutItem>& items, const Trapezoid& root, long r,
                                const CuttingParams& params = {});

/// Checks partition, containment, crossing bounds (by brute force over all
/// items) and child counts. Returns an empty string when all hold.
std::string VerifyHierarchy(const CuttingHierarchy& h);

/// Number of pairwise intersections of crossing segments strictly inside the
/// cell (K_cell in the cell-count bound).
long InteriorIntersections(const std::vector<CutItem>& items, const CuttingCell& cell);

/// Smallest k with rho^k >= r.
int LevelsFor(long r, int rho);

}  // namespace depthcut
