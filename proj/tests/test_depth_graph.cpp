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

#include "depthcut/depth_graph.hpp"

using namespace depthcut;

namespace {

DepthGraph Graph(int n, std::vector<std::pair<int, int>> edges) {
  DepthGraph g(n);
  for (auto [a, b] : edges) g.AddEdge(a, b);
  g.Finalize();
  return g;
}

// Brute force: does any subset of `nodes` of size >= 2 contain a cycle
// through all its members in some order? Equivalent to the induced subgraph
// having a cycle, tested independently by checking every subset for a
// source-free remainder.
bool BruteHasCycle(const DepthGraph& g, const std::vector<int>& nodes) {
  std::vector<int> rest = nodes;
  while (true) {
    bool removed = false;
    for (std::size_t i = 0; i < rest.size(); ++i) {
      bool has_pred = false;
      for (int u : rest)
        if (g.HasEdge(u, rest[i])) has_pred = true;
      if (!has_pred) {
        rest.erase(rest.begin() + static_cast<long>(i));
        removed = true;
        break;
      }
    }
    if (rest.empty()) return false;
    if (!removed) return true;
  }
}

Segment3 Seg(Point3 a, Point3 b) { return {a, b}; }

}  // namespace

TEST_CASE("build_depth_graph basics") {
  std::vector<DepthObject> one{DepthObject::FromTriangle({{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, 0})};
  CHECK(BuildDepthGraph(one).edges.empty());
  std::vector<DepthObject> two{DepthObject::FromTriangle({{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, 0}),
                               DepthObject::FromTriangle({{0, 0, 1}, {1, 0, 1}, {0, 1, 1}, 1})};
  auto g = BuildDepthGraph(two);
  REQUIRE(g.edges.size() == 1);
  CHECK(g.edges[0].from == 0);
  CHECK(g.edges[0].to == 1);
}

TEST_CASE("find_depth_order") {
  auto empty = FindDepthOrder(Graph(4, {}));
  CHECK(empty.acyclic);
  CHECK(empty.order == std::vector<int>{0, 1, 2, 3});
  auto chain = FindDepthOrder(Graph(3, {{0, 1}, {1, 2}}));
  CHECK(chain.order == std::vector<int>{0, 1, 2});
  auto cyc = FindDepthOrder(Graph(3, {{0, 1}, {1, 2}, {2, 0}}));
  CHECK_FALSE(cyc.acyclic);
  CHECK(cyc.cycle.nodes == std::vector<int>{0, 1, 2});
}

TEST_CASE("minimal_cycle on a 4-cycle with a chord") {
  auto g = Graph(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {2, 0}});
  auto c = MinimalCycle(g);
  CHECK(c.nodes == std::vector<int>{0, 1, 2});
  CHECK_THROWS(MinimalCycle(Graph(3, {{0, 1}})));
}

TEST_CASE("order exists iff all strongly connected components are trivial") {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 7);
    std::vector<std::pair<int, int>> edges;
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        if (a != b && rng() % 5 == 0) edges.emplace_back(a, b);
    auto g = Graph(n, edges);
    int count = 0;
    StronglyConnectedComponents(g, &count);
    auto r = FindDepthOrder(g);
    CHECK(r.acyclic == (count == n));
    std::vector<int> all(n);
    for (int v = 0; v < n; ++v) all[v] = v;
    CHECK(r.acyclic == !BruteHasCycle(g, all));
    if (r.acyclic) {
      std::vector<int> pos(n);
      for (int k = 0; k < n; ++k) pos[r.order[k]] = k;
      for (auto [a, b] : edges) CHECK(pos[a] < pos[b]);
      continue;
    }
    // Reported cycles are real and minimal: every strict subset is acyclic.
    auto c = MinimalCycle(g);
    for (std::size_t i = 0; i < c.nodes.size(); ++i)
      CHECK(g.HasEdge(c.nodes[i], c.nodes[(i + 1) % c.nodes.size()]));
    const int k = static_cast<int>(c.nodes.size());
    for (int mask = 1; mask < (1 << k) - 1; ++mask) {
      std::vector<int> sub;
      for (int i = 0; i < k; ++i)
        if (mask & (1 << i)) sub.push_back(c.nodes[i]);
      CHECK_FALSE(BruteHasCycle(g, sub));
    }
    CHECK(InducesCycle(g, c.nodes));
  }
}

TEST_CASE("segment weave cycle and verify_depth_order") {
  // Three segments along the sides of a triangle, each rising so that it
  // passes over the next: a classic cyclic overlap among segments.
  std::vector<DepthObject> objs{
      DepthObject::FromSegment(Seg({0, 0, 0}, {6, 0, 3}), 0),
      DepthObject::FromSegment(Seg({5, -1, 0}, {2, 5, 3}), 1),
      DepthObject::FromSegment(Seg({3, 5, 0}, {0, -1, 3}), 2),
  };
  auto g = BuildDepthGraph(objs);
  auto r = FindDepthOrder(g);
  REQUIRE_FALSE(r.acyclic);
  CHECK(r.cycle.nodes.size() == 3);
  for (std::size_t i = 0; i < 3; ++i) {
    const auto& a = objs[r.cycle.nodes[i]];
    const auto& b = objs[r.cycle.nodes[(i + 1) % 3]];
    const Point2& w = r.cycle.witnesses[i];
    CHECK(a.ZAt(w) < b.ZAt(w));
  }
  std::vector<DepthObject> stacked{DepthObject::FromTriangle({{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, 0}),
                                   DepthObject::FromTriangle({{0, 0, 1}, {1, 0, 1}, {0, 1, 1}, 1})};
  CHECK_FALSE(VerifyDepthOrder(stacked, {0, 1}));
  auto bad = VerifyDepthOrder(stacked, {1, 0});
  REQUIRE(bad);
  CHECK(*bad == std::pair(0, 1));
}
