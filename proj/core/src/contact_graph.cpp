// Copyright 2026 The HealSim Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "healsim/contact_graph.hpp"

#include <algorithm>
#include <limits>
#include <queue>

#include "healsim/error.hpp"

namespace healsim::sim {

ContactGraph::ContactGraph(std::size_t bodies)
    : adjacency_(bodies), left_(bodies, false), right_(bodies, false) {}

void ContactGraph::add_contact(std::uint32_t a, std::uint32_t b) {
  if (a >= bodies() || b >= bodies() || a == b) {
    throw Error(ErrorCode::kInvalidArgument, "bad contact edge");
  }
  auto& na = adjacency_[a];
  if (std::find(na.begin(), na.end(), b) != na.end()) return;
  na.push_back(b);
  adjacency_[b].push_back(a);
  ++contacts_;
}

namespace {

class UnitFlow {
 public:
  explicit UnitFlow(std::size_t nodes) : head_(nodes), level_(nodes), it_(nodes) {}

  void add_edge(std::size_t from, std::size_t to) {
    head_[from].push_back(edges_.size());
    edges_.push_back({to, 1});
    head_[to].push_back(edges_.size());
    edges_.push_back({from, 0});
  }

  std::size_t run(std::size_t s, std::size_t t) {
    std::size_t flow = 0;
    while (bfs(s, t)) {
      std::fill(it_.begin(), it_.end(), 0);
      while (dfs(s, t)) ++flow;
    }
    return flow;
  }

  // Next node reached by a saturated forward edge out of `from` whose unit
  // has not been consumed yet.
  std::size_t take(std::size_t from) {
    for (const std::size_t e : head_[from]) {
      if (e % 2 == 0 && edges_[e].cap == 0 && !edges_[e].taken) {
        edges_[e].taken = true;
        return edges_[e].to;
      }
    }
    return std::numeric_limits<std::size_t>::max();
  }

 private:
  struct Edge {
    std::size_t to;
    int cap;
    bool taken = false;
  };

  bool bfs(std::size_t s, std::size_t t) {
    std::fill(level_.begin(), level_.end(), -1);
    std::queue<std::size_t> q;
    level_[s] = 0;
    q.push(s);
    while (!q.empty()) {
      const std::size_t v = q.front();
      q.pop();
      for (const std::size_t e : head_[v]) {
        const auto& edge = edges_[e];
        if (edge.cap > 0 && level_[edge.to] < 0) {
          level_[edge.to] = level_[v] + 1;
          q.push(edge.to);
        }
      }
    }
    return level_[t] >= 0;
  }

  // Iterative augmenting-path search along the level graph.
  bool dfs(std::size_t s, std::size_t t) {
    std::vector<std::size_t> path;  // edge ids
    std::size_t v = s;
    while (v != t) {
      bool advanced = false;
      for (; it_[v] < head_[v].size(); ++it_[v]) {
        const std::size_t e = head_[v][it_[v]];
        const auto& edge = edges_[e];
        if (edge.cap > 0 && level_[edge.to] == level_[v] + 1) {
          path.push_back(e);
          v = edge.to;
          advanced = true;
          break;
        }
      }
      if (advanced) continue;
      level_[v] = -1;  // dead end
      if (path.empty()) return false;
      const std::size_t back = path.back();
      path.pop_back();
      v = edges_[back ^ 1].to;
      ++it_[v];
    }
    for (const std::size_t e : path) {
      edges_[e].cap -= 1;
      edges_[e ^ 1].cap += 1;
    }
    return true;
  }

  std::vector<std::vector<std::size_t>> head_;
  std::vector<Edge> edges_;
  std::vector<int> level_;
  std::vector<std::size_t> it_;
};

}  // namespace

DisjointPaths max_disjoint_paths(const ContactGraph& graph) {
  const std::size_t n = graph.bodies();
  const std::size_t source = 2 * n;
  const std::size_t sink = 2 * n + 1;
  auto in = [](std::size_t v) { return 2 * v; };
  auto out = [](std::size_t v) { return 2 * v + 1; };

  UnitFlow flow(2 * n + 2);
  for (std::uint32_t v = 0; v < n; ++v) {
    flow.add_edge(in(v), out(v));
    if (graph.touches_left(v)) flow.add_edge(source, in(v));
    if (graph.touches_right(v)) flow.add_edge(out(v), sink);
    for (const std::uint32_t w : graph.neighbours(v)) flow.add_edge(out(v), in(w));
  }

  DisjointPaths result;
  result.count = flow.run(source, sink);
  for (std::size_t k = 0; k < result.count; ++k) {
    std::vector<std::uint32_t> path;
    std::size_t node = flow.take(source);
    while (node != sink && node < 2 * n) {
      const std::size_t body = node / 2;
      path.push_back(static_cast<std::uint32_t>(body));
      node = flow.take(out(body));
    }
    result.paths.push_back(std::move(path));
  }
  return result;
}

}  // namespace healsim::sim
