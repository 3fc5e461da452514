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

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "depthcut/cutset.hpp"
#include "depthcut/cutting.hpp"

namespace depthcut {

struct PipelineParams {
  long r = 0;  // 0 selects the default of the algorithm
  int rho = 4;
  CutStrategy strategy = CutStrategy::kGreedy;
  std::uint64_t seed = 1;
  double sample_constant = 1.0;
  bool verify = true;  // run the depth-graph oracle on the output
};

/// A piece of one input triangle inside one hierarchy cell.
struct Piece {
  ConvexFragment fragment;
  int triangle = 0;
  int level = 0;
  int cell = 0;
  bool containment = false;  // the cell lies inside the triangle's projection
};

struct Prism {
  int column = 0;  // leaf cell index
  int below = -1;  // slicing triangle under the prism, -1 for none
  int above = -1;
  std::vector<int> pieces;            // T_1(sigma), indices into the piece list
  std::vector<Segment3> edges;        // E(sigma), relatively open
  std::vector<int> edge_triangle;
  std::vector<Point3> vertices;       // V(sigma)
};

struct PrismSubdivision {
  std::vector<std::vector<int>> slicers;  // per leaf cell, sorted bottom to top
  std::vector<Prism> prisms;              // only prisms that contain pieces
  std::vector<int> prism_of_piece;        // -1 for slicing pieces
};

/// Pieces of triangle `t` by descent through `h`. `edge_items[e]` is the
/// hierarchy item of edge e of the triangle.
std::vector<Piece> PiecesT1(const CuttingHierarchy& h, const Triangle3& t, int triangle,
                            const std::array<int, 3>& edge_items);

PrismSubdivision BuildPrisms(const CuttingHierarchy& h, const std::vector<Piece>& pieces,
                             const std::vector<Triangle3>& triangles);

struct StepTwoResult {
  std::vector<ConvexFragment> fragments;
  std::vector<int> piece_of;  // source piece of every fragment
  CutSet cuts;                // X(sigma) on the prism's edges
  std::size_t planes = 0;
  bool degenerate = false;
};

StepTwoResult Step2Cut(const Prism& prism, const std::vector<Piece>& pieces, CutStrategy strategy,
                       std::uint64_t seed = 1);

struct FragmentOrigin {
  int triangle = 0;
  int piece = 0;
  int prism = -1;  // -1 for pass-through pieces
};

struct PipelineStats {
  std::string algorithm;
  long n = 0;
  long edges = 0;
  long K = 0;
  long r = 0;
  int rho = 0;
  int k = 0;
  std::vector<long> level_cells;
  int max_children = 0;
  long resamples = 0;
  long t1 = 0;
  long t1_star = 0;
  long prisms = 0;
  long max_prism_edges = 0;
  long prism_budget = 0;
  long degenerate_prisms = 0;
  long cuts_x = 0;
  long planes = 0;
  long t2 = 0;
  bool oracle_ok = false;
  std::string hierarchy_check;  // VerifyHierarchy message, empty when valid
  double ms_hierarchy = 0, ms_phase1 = 0, ms_phase2 = 0, ms_oracle = 0;
};

struct FragmentationResult {
  std::vector<ConvexFragment> fragments;
  std::vector<FragmentOrigin> origin;
  std::vector<int> t1_star;  // indices into fragments
  PipelineStats stats;
};

/// Projected edge crossings between different triangles.
long CountEdgeCrossings(const std::vector<Triangle3>& triangles);

long DefaultTrianglesR(long n);
long KSensitiveR(long n, long K);
long DefaultLinesR(long n);

FragmentationResult CutTriangles(const std::vector<Triangle3>& triangles, const PipelineParams& params = {});
FragmentationResult CutTrianglesKSensitive(const std::vector<Triangle3>& triangles,
                                           const PipelineParams& params = {});

struct LinesStats {
  long n = 0;
  long r = 0;
  int k = 0;
  long boundary_cuts = 0;
  long column_cuts = 0;
  long wall_segments = 0;
  long fragments = 0;
  bool oracle_ok = false;
  std::string hierarchy_check;
};

struct LinesResult {
  CutSet cuts;
  SegmentFragments fragments;
  LinesStats stats;
};

LinesResult CutLines(const std::vector<Segment3>& segments, const PipelineParams& params = {});

std::vector<ConvexFragment> Triangulate(const std::vector<ConvexFragment>& fragments);

/// Depth-graph acyclicity of convex fragments, by the exact oracle.
bool FragmentsAcyclic(const std::vector<ConvexFragment>& fragments);

/// Contents of one column: fragments clipped to the cell and segments inside it.
struct ColumnContents {
  Cell2 cell;
  std::vector<ConvexFragment> fragments;
  std::vector<Segment3> segments;
};

enum class Prop1Verdict { kHolds, kVacuous, kRejected, kViolated };
const char* ToString(Prop1Verdict v);

/// Acyclic edges imply acyclic contents. Rejects columns with a vertex inside;
/// kVacuous when the edge set itself is cyclic.
Prop1Verdict Proposition1Check(const ColumnContents& column, std::string* counterexample = nullptr);

/// Original fragment edges and the segments, as relatively open segments
/// restricted to the cell interior.
std::vector<Segment3> ColumnEdges(const ColumnContents& column);

}  // namespace depthcut
