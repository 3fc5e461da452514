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
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "depthcut/relation.hpp"

namespace depthcut {

enum class CutProvenance { kTrivial, kGreedy, kExact, kMapped, kSegTree };
const char* ToString(CutProvenance p);

struct CutPoint {
  Rational t;  // parameter along the segment, 0 at a and 1 at b
  Point3 point;
  CutProvenance provenance = CutProvenance::kGreedy;
};

/// Cut points per segment index, sorted by parameter, without duplicates.
struct CutSet {
  std::map<int, std::vector<CutPoint>> cuts;

  /// Adds the point at parameter t of s; a cut already present wins.
  void Add(int index, const Segment3& s, const Rational& t, CutProvenance provenance);
  void Merge(const CutSet& other, const std::vector<Segment3>& segments);
  std::size_t size() const;
  bool Contains(int index, const Rational& t) const;
};

struct Crossing {
  Rational t;     // along this segment
  int partner;
  Rational partner_t;
  int sign;       // +1 when this segment is above the partner there
  Point2 at;
};

/// Projected crossings along every segment, sorted by parameter.
struct CrossingSchedule {
  std::vector<std::vector<Crossing>> along;
  long total = 0;  // number of crossing pairs
};

/// Raised when two projections overlap in more than a point.
class DegenerateInput : public std::invalid_argument {
 public:
  DegenerateInput(int a, int b);
  int a, b;
};

/// Throws DegenerateInput on projected overlaps and DisjointnessViolation
/// when two segments meet in 3-space. Open endpoints never cross anything.
CrossingSchedule ComputeCrossingSchedule(const std::vector<Segment3>& segments);

/// Result of cutting segments: pieces with open ends at every cut.
struct SegmentFragments {
  std::vector<Segment3> pieces;
  std::vector<int> parent;
  std::vector<std::pair<Rational, Rational>> range;  // parameter interval on the parent

  std::vector<DepthObject> Objects() const;
};

SegmentFragments ApplyCuts(const std::vector<Segment3>& segments, const CutSet& cuts);

/// Oracle: the fragments after cutting have an acyclic depth graph.
bool IsComplete(const std::vector<Segment3>& segments, const CutSet& cuts);

/// Cuts both partners at every crossing.
CutSet TrivialCutSet(const std::vector<Segment3>& segments, const CrossingSchedule& schedule);

/// Repeatedly cuts a minimal cycle at a gap midpoint until acyclic.
CutSet GreedyCutSet(const std::vector<Segment3>& segments);

class BudgetExceeded : public std::length_error {
 public:
  using std::length_error::length_error;
};

/// Minimum-size subset of gap-midpoint candidates that makes the fragments
/// acyclic. Throws BudgetExceeded when there are more than max_candidates.
CutSet ExactSmallCutSet(const std::vector<Segment3>& segments, int max_candidates = 24);

/// Midpoints between consecutive crossings along each segment.
std::vector<std::pair<int, Rational>> GapCandidates(const CrossingSchedule& schedule);

// Degeneracies --------------------------------------------------------------

struct DegeneracyReport {
  bool endpoint_on_segment = false;  // type (i)
  bool concurrent = false;           // type (ii)
  bool parallel_overlap = false;     // type (iii): parallel projections that meet
  bool any() const { return endpoint_on_segment || concurrent || parallel_overlap; }
};

DegeneracyReport DetectDegeneracies(const std::vector<Segment3>& segments);

struct PerturbationMap {
  std::vector<Segment3> original;
  std::vector<Segment3> perturbed;
  Rational epsilon;  // 0 for the identity map
  int attempts = 0;
  bool identity() const { return epsilon == 0; }
};

/// Extends closed ends and shortens open ends by the fraction epsilon of the
/// segment, then translates it by a seeded offset of size epsilon^2 times the
/// extent. Epsilon is halved until the result is degeneracy-free and the
/// preservation properties verify.
PerturbationMap DegeneracyNormalize(const std::vector<Segment3>& segments, std::uint64_t seed = 1);

/// Checks the three preservation properties and non-degeneracy of the
/// perturbed set. Returns an empty string when they hold.
std::string VerifyPerturbation(const PerturbationMap& map);

/// Snaps each cut on a perturbed segment to its nearest projected crossing
/// and maps it to the corresponding crossing on the original segment.
CutSet MapBackCuts(const CutSet& perturbed_cuts, const PerturbationMap& map);

/// Y-cuts: for fragments sharing a projected line whose projections overlap,
/// cut at the boundaries of their canonical segment-tree intervals.
CutSet SegmentTreeCuts(const std::vector<Segment3>& segments, const SegmentFragments& fragments);

enum class CutStrategy { kTrivial, kGreedy, kExact };
const char* ToString(CutStrategy s);
CutStrategy ParseStrategy(const std::string& name);

struct DegenerateCutResult {
  CutSet x;         // mapped from the perturbed set
  CutSet y;         // segment-tree cuts
  CutSet combined;  // x union y
  PerturbationMap map;
  bool complete = false;  // oracle verdict on the original segments
};

DegenerateCutResult CompleteCutSetDegenerate(const std::vector<Segment3>& segments, CutStrategy strategy,
                                             std::uint64_t seed = 1);

/// Chooses the direct or the degenerate route and always returns a cut set
/// the oracle has accepted. Throws std::runtime_error otherwise.
CutSet ComputeCutSet(const std::vector<Segment3>& segments, CutStrategy strategy, std::uint64_t seed = 1,
                     bool* used_degenerate_route = nullptr);

}  // namespace depthcut
