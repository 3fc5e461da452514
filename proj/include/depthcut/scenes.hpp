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
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "depthcut/pipeline.hpp"

namespace depthcut {

struct Scene {
  std::string family;
  std::vector<std::pair<std::string, std::string>> params;
  std::uint64_t seed = 0;
  std::vector<Triangle3> triangles;
  std::vector<Segment3> segments;
  std::optional<bool> has_cycle;
  std::optional<int> expected_min_cuts;
  std::string expected_min_cuts_source;

  std::size_t size() const { return triangles.size() + segments.size(); }
  std::string Param(const std::string& key) const;
};

class SceneError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Depth objects of all triangles followed by all segments.
std::vector<DepthObject> SceneObjects(const Scene& scene);

/// Non-vertical objects, pairwise disjoint in 3-space. Throws.
void ValidateScene(const Scene& scene);

/// Fills has_cycle (oracle) and, for small segment scenes, expected_min_cuts.
void AnnotateScene(Scene& scene);

/// A thin triangle around s: apex at s.a, base of half-width w at s.b.
Triangle3 ThinTriangle(const Segment3& s, const Rational& w);

Scene GenCyclicTriple();
Scene GenBipartiteWeaving(int m, bool thin = false);
Scene GenGridWeaving(int m);
Scene GenFig3Gadget();
Scene GenRandomTriangles(int n, std::uint64_t seed, double spread = 1.0);
Scene GenParallelTriangles(int n, std::uint64_t seed);
Scene GenParallelOverlap(int k);
Scene GenConcurrentGadget();
Scene GenEndpointGadget();
Scene GenRandomLines(int n, std::uint64_t seed);
Scene GenParallelLines(int n);
/// Horizontal triangles at distinct heights; sparse has K near n, dense a
/// constant fraction of n^2.
Scene GenSparseK(int n, std::uint64_t seed);
Scene GenDenseK(int n, std::uint64_t seed);

/// Generator dispatch by family name; `n` is the size parameter.
Scene Generate(const std::string& family, int n, std::uint64_t seed);
std::vector<std::string> Families();

/// A column over the box [0,10]^2 holding clipped triangles and segments whose
/// vertices all lie outside it.
ColumnContents GenVertexFreeColumn(std::uint64_t seed);

// The Fig. 3 gadget: triangle 0 is green, 1 and 2 blue, 3 and 4 red.
struct Fig3Layout {
  Rational x0, y0, x1, y1;  // the prism's cell
  Point3 cut;               // the single cut point on the green edge
};
Fig3Layout Fig3Geometry();
/// The gadget's triangles clipped to the prism cell.
ColumnContents Fig3Column(const Scene& gadget);

}  // namespace depthcut
