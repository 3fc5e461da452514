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

#include <optional>
#include <utility>
#include <vector>

#include "depthcut/relation.hpp"

namespace depthcut {

/// Directed graph over object indices; edge (i, j) means object i is below
/// object j. Each edge carries the witness point of the relation.
struct DepthGraph {
  struct Edge {
    int from, to;
    Point2 witness;
  };

  int node_count = 0;
  std::vector<Edge> edges;                  // sorted by (from, to)
  std::vector<std::vector<int>> out;        // successor lists, ascending
  std::vector<std::vector<int>> in;         // predecessor lists, ascending

  DepthGraph() = default;
  explicit DepthGraph(int n) : node_count(n), out(n), in(n) {}
  /// Adds i -> j; call Finalize() afterwards.
  void AddEdge(int from, int to, Point2 witness = {});
  void Finalize();
  bool HasEdge(int from, int to) const;
  const Edge* FindEdge(int from, int to) const;
};

/// o_0 below o_1 below ... below o_{k-1} below o_0, with one witness per
/// consecutive pair (witnesses[i] certifies nodes[i] below nodes[i+1]).
struct DepthCycle {
  std::vector<int> nodes;
  std::vector<Point2> witnesses;
};

/// Exact pairwise graph over all objects. Throws DisjointnessViolation.
DepthGraph BuildDepthGraph(const std::vector<DepthObject>& objects);

struct DepthOrderResult {
  bool acyclic = false;
  std::vector<int> order;  // when acyclic
  DepthCycle cycle;        // otherwise: a shortest cycle
};

/// Topological order (smallest available id first) or a shortest cycle.
DepthOrderResult FindDepthOrder(const DepthGraph& g);

/// Shortest directed cycle among `allowed` nodes (all when empty); ties go to
/// the smallest start node. nullopt if acyclic.
std::optional<DepthCycle> ShortestCycle(const DepthGraph& g, const std::vector<bool>& allowed = {});

/// A cycle no strict node subset of which induces a cycle. Throws
/// std::invalid_argument if g is acyclic.
DepthCycle MinimalCycle(const DepthGraph& g);

/// True when the subgraph induced by `nodes` contains a directed cycle.
bool InducesCycle(const DepthGraph& g, const std::vector<int>& nodes);

/// Strongly connected components (iterative Tarjan); component id per node.
std::vector<int> StronglyConnectedComponents(const DepthGraph& g, int* component_count = nullptr);

/// First pair (a, b) with a below b but b placed before a in `order`.
std::optional<std::pair<int, int>> VerifyDepthOrder(const std::vector<DepthObject>& objects,
                                                     const std::vector<int>& order);

/// Builds the graph and checks it for cycles; the oracle used everywhere.
bool IsAcyclic(const std::vector<DepthObject>& objects);

}  // namespace depthcut
