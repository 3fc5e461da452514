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

#include "depthcut/depth_graph.hpp"

#include <algorithm>
#include <functional>
#include <queue>
#include <stdexcept>

namespace depthcut {

void DepthGraph::AddEdge(int from, int to, Point2 witness) {
  edges.push_back({from, to, std::move(witness)});
}

void DepthGraph::Finalize() {
  std::sort(edges.begin(), edges.end(),
            [](const Edge& e, const Edge& f) { return std::pair(e.from, e.to) < std::pair(f.from, f.to); });
  out.assign(node_count, {});
  in.assign(node_count, {});
  for (const auto& e : edges) {
    out[e.from].push_back(e.to);
    in[e.to].push_back(e.from);
  }
  for (auto& v : in) std::sort(v.begin(), v.end());
}

const DepthGraph::Edge* DepthGraph::FindEdge(int from, int to) const {
  auto it = std::lower_bound(edges.begin(), edges.end(), std::pair(from, to),
                             [](const Edge& e, const std::pair<int, int>& key) {
                               return std::pair(e.from, e.to) < key;
                             });
  if (it == edges.end() || it->from != from || it->to != to) return nullptr;
  return &*it;
}

bool DepthGraph::HasEdge(int from, int to) const { return FindEdge(from, to) != nullptr; }

DepthGraph BuildDepthGraph(const std::vector<DepthObject>& objects) {
  DepthGraph g(static_cast<int>(objects.size()));
  for (const auto& [i, j] : CandidatePairs(objects)) {
    const BelowResult r = Below(objects[i], objects[j]);
    if (r.relation == Relation::kABelowB) g.AddEdge(static_cast<int>(i), static_cast<int>(j), r.witness);
    else if (r.relation == Relation::kBBelowA) g.AddEdge(static_cast<int>(j), static_cast<int>(i), r.witness);
  }
  g.Finalize();
  return g;
}

DepthOrderResult FindDepthOrder(const DepthGraph& g) {
  DepthOrderResult result;
  std::vector<int> indegree(g.node_count, 0);
  for (const auto& e : g.edges) ++indegree[e.to];
  std::priority_queue<int, std::vector<int>, std::greater<>> ready;
  for (int v = 0; v < g.node_count; ++v)
    if (indegree[v] == 0) ready.push(v);
  while (!ready.empty()) {
    const int v = ready.top();
    ready.pop();
    result.order.push_back(v);
    for (int w : g.out[v])
      if (--indegree[w] == 0) ready.push(w);
  }
  if (static_cast<int>(result.order.size()) == g.node_count) {
    result.acyclic = true;
    return result;
  }
  result.order.clear();
  result.cycle = *ShortestCycle(g);
  return result;
}

std::vector<int> StronglyConnectedComponents(const DepthGraph& g, int* component_count) {
  const int n = g.node_count;
  std::vector<int> index(n, -1), low(n, 0), comp(n, -1);
  std::vector<bool> on_stack(n, false);
  std::vector<int> stack;
  int next_index = 0, next_comp = 0;
  // Explicit DFS frames: (node, position in its successor list).
  std::vector<std::pair<int, std::size_t>> frames;
  for (int root = 0; root < n; ++root) {
    if (index[root] != -1) continue;
    frames.emplace_back(root, 0);
    index[root] = low[root] = next_index++;
    stack.push_back(root);
    on_stack[root] = true;
    while (!frames.empty()) {
      auto& [v, pos] = frames.back();
      if (pos < g.out[v].size()) {
        const int w = g.out[v][pos++];
        if (index[w] == -1) {
          index[w] = low[w] = next_index++;
          stack.push_back(w);
          on_stack[w] = true;
          frames.emplace_back(w, 0);
        } else if (on_stack[w]) {
          low[v] = std::min(low[v], index[w]);
        }
        continue;
      }
      const int done = v;
      frames.pop_back();
      if (!frames.empty()) low[frames.back().first] = std::min(low[frames.back().first], low[done]);
      if (low[done] == index[done]) {
        int w;
        do {
          w = stack.back();
          stack.pop_back();
          on_stack[w] = false;
          comp[w] = next_comp;
        } while (w != done);
        ++next_comp;
      }
    }
  }
  if (component_count) *component_count = next_comp;
  return comp;
}

std::optional<DepthCycle> ShortestCycle(const DepthGraph& g, const std::vector<bool>& allowed) {
  const int n = g.node_count;
  auto ok = [&](int v) { return allowed.empty() || allowed[v]; };
  // Only nodes in nontrivial components of the allowed subgraph can be on a cycle.
  DepthGraph sub(n);
  for (const auto& e : g.edges)
    if (ok(e.from) && ok(e.to)) sub.AddEdge(e.from, e.to);
  sub.Finalize();
  int count = 0;
  const std::vector<int> comp = StronglyConnectedComponents(sub, &count);
  std::vector<int> comp_size(count, 0);
  for (int v = 0; v < n; ++v) ++comp_size[comp[v]];

  std::vector<int> best;
  std::vector<int> dist(n), parent(n);
  for (int s = 0; s < n; ++s) {
    if (!ok(s) || comp_size[comp[s]] < 2) continue;
    std::fill(dist.begin(), dist.end(), -1);
    dist[s] = 0;
    std::queue<int> queue;
    queue.push(s);
    int closing = -1;
    while (!queue.empty() && closing == -1) {
      const int v = queue.front();
      queue.pop();
      if (!best.empty() && dist[v] + 1 >= static_cast<int>(best.size())) break;
      for (int w : sub.out[v]) {
        if (comp[w] != comp[s]) continue;
        if (w == s) {
          closing = v;
          break;
        }
        if (dist[w] == -1) {
          dist[w] = dist[v] + 1;
          parent[w] = v;
          queue.push(w);
        }
      }
    }
    if (closing == -1) continue;
    std::vector<int> cycle;
    for (int v = closing; v != s; v = parent[v]) cycle.push_back(v);
    cycle.push_back(s);
    std::reverse(cycle.begin(), cycle.end());
    if (best.empty() || cycle.size() < best.size()) best = std::move(cycle);
    if (best.size() == 2) break;
  }
  if (best.empty()) return std::nullopt;
  DepthCycle c;
  c.nodes = best;
  for (std::size_t i = 0; i < best.size(); ++i) {
    const auto* e = g.FindEdge(best[i], best[(i + 1) % best.size()]);
    c.witnesses.push_back(e->witness);
  }
  return c;
}

bool InducesCycle(const DepthGraph& g, const std::vector<int>& nodes) {
  std::vector<bool> allowed(g.node_count, false);
  for (int v : nodes) allowed[v] = true;
  std::vector<int> indegree(g.node_count, 0);
  for (const auto& e : g.edges)
    if (allowed[e.from] && allowed[e.to]) ++indegree[e.to];
  std::vector<int> ready;
  for (int v : nodes)
    if (indegree[v] == 0) ready.push_back(v);
  std::size_t seen = 0;
  while (!ready.empty()) {
    const int v = ready.back();
    ready.pop_back();
    ++seen;
    for (int w : g.out[v])
      if (allowed[w] && --indegree[w] == 0) ready.push_back(w);
  }
  return seen < nodes.size();
}

DepthCycle MinimalCycle(const DepthGraph& g) {
  auto cycle = ShortestCycle(g);
  if (!cycle) throw std::invalid_argument("graph has no cycle");
  // A shortest cycle is already minimal; shrink anyway in case the graph
  // was restricted by the caller in a way that breaks that argument.
  bool shrunk = true;
  while (shrunk && cycle->nodes.size() > 2) {
    shrunk = false;
    for (std::size_t drop = 0; drop < cycle->nodes.size(); ++drop) {
      std::vector<bool> allowed(g.node_count, false);
      for (std::size_t i = 0; i < cycle->nodes.size(); ++i)
        if (i != drop) allowed[cycle->nodes[i]] = true;
      if (auto sub = ShortestCycle(g, allowed)) {
        cycle = std::move(sub);
        shrunk = true;
        break;
      }
    }
  }
  return *cycle;
}

std::optional<std::pair<int, int>> VerifyDepthOrder(const std::vector<DepthObject>& objects,
                                                     const std::vector<int>& order) {
  std::vector<int> position(objects.size(), -1);
  for (std::size_t k = 0; k < order.size(); ++k) position[order[k]] = static_cast<int>(k);
  const DepthGraph g = BuildDepthGraph(objects);
  for (const auto& e : g.edges)
    if (position[e.from] > position[e.to]) return std::pair(e.from, e.to);
  return std::nullopt;
}

bool IsAcyclic(const std::vector<DepthObject>& objects) {
  return FindDepthOrder(BuildDepthGraph(objects)).acyclic;
}

}  // namespace depthcut
