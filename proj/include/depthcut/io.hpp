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

#include <json.hpp>

#include <stdexcept>
#include <string>
#include <vector>

#include "depthcut/pipeline.hpp"
#include "depthcut/scenes.hpp"

namespace depthcut {

using Json = nlohmann::ordered_json;

class FormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline constexpr int kFileVersion = 1;

/// Scene document: {version, objects: [{id, kind, vertices}], metadata}.
/// Coordinates are exact strings (finite decimals, else "p/q").
Json SceneToJson(const Scene& scene);
/// Throws FormatError on malformed documents or duplicate ids.
Scene SceneFromJson(const Json& doc);

/// A set of fragments with provenance, as written by `cut`.
struct FragmentFile {
  std::string algorithm;
  std::vector<ConvexFragment> fragments;
  std::vector<FragmentOrigin> origin;    // parallel to fragments, may be empty
  std::vector<Segment3> segments;        // segment pieces for the lines path
  std::vector<int> segment_parent;       // parallel to segments
  Json stats;                            // free-form statistics record
};

Json FragmentsToJson(const FragmentFile& file);
FragmentFile FragmentsFromJson(const Json& doc);

/// Objects of a fragment file: fragments first, then segment pieces.
std::vector<DepthObject> FragmentObjects(const FragmentFile& file);

Json StatsToJson(const PipelineStats& stats);
Json StatsToJson(const LinesStats& stats);

Json CutSetToJson(const CutSet& cuts);
Json HierarchyToJson(const CuttingHierarchy& h);

/// Geometry-only OBJ of the fragments, one face per fragment.
std::string FragmentsToObj(const std::vector<ConvexFragment>& fragments);

Json ReadJsonFile(const std::string& path);
void WriteTextFile(const std::string& path, const std::string& text);
/// Two-space indented JSON with a trailing newline; byte-stable.
std::string DumpJson(const Json& doc);

}  // namespace depthcut
