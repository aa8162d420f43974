// Copyright 2026 The ratnash Authors
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

#include <algorithm>
#include <numeric>

#include "ratnash/synth.hpp"

namespace ratnash {

bool IntersectionGraph::HasEdge(int a, int b) const {
  const auto& adj = neighbors[a];
  return std::binary_search(adj.begin(), adj.end(), b);
}

int IntersectionGraph::MaxDegree() const {
  int best = 0;
  for (const auto& adj : neighbors) {
    best = std::max(best, static_cast<int>(adj.size()));
  }
  return best;
}

IntersectionGraph IntersectionGraph::Induced(
    const std::vector<int>& vertices) const {
  IntersectionGraph out;
  out.neighbors.resize(vertices.size());
  for (std::size_t a = 0; a < vertices.size(); ++a) {
    for (std::size_t b = 0; b < vertices.size(); ++b) {
      if (a != b && HasEdge(vertices[a], vertices[b])) {
        out.neighbors[a].push_back(static_cast<int>(b));
      }
    }
  }
  return out;
}

IntersectionGraph BuildIntersectionGraph(const DataSet& data, Side side,
                                         const Tolerances& tol) {
  const int m = data.size();
  std::vector<std::vector<char>> member(m, std::vector<char>(data.n(), 0));
  for (int k = 0; k < m; ++k) {
    const MixedStrategy& s = side == Side::kRow ? data[k].row : data[k].col;
    for (int i : Support(s, tol)) member[k][i] = 1;
  }
  IntersectionGraph graph;
  graph.neighbors.resize(m);
  for (int a = 0; a < m; ++a) {
    for (int b = a + 1; b < m; ++b) {
      for (int i = 0; i < data.n(); ++i) {
        if (member[a][i] && member[b][i]) {
          graph.neighbors[a].push_back(b);
          graph.neighbors[b].push_back(a);
          break;
        }
      }
    }
  }
  for (auto& adj : graph.neighbors) std::sort(adj.begin(), adj.end());
  return graph;
}

std::vector<std::vector<int>> Coloring::Classes() const {
  std::vector<std::vector<int>> classes(color_count);
  for (std::size_t v = 0; v < color.size(); ++v) {
    classes[color[v]].push_back(static_cast<int>(v));
  }
  return classes;
}

Coloring GreedyColoring(const IntersectionGraph& graph) {
  const int n = graph.size();
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    return graph.neighbors[a].size() > graph.neighbors[b].size();
  });

  Coloring out;
  out.color.assign(n, -1);
  std::vector<char> used;
  for (int v : order) {
    used.assign(graph.neighbors[v].size() + 1, 0);
    for (int u : graph.neighbors[v]) {
      const int c = out.color[u];
      if (c >= 0 && c < static_cast<int>(used.size())) used[c] = 1;
    }
    int c = 0;
    while (used[c]) ++c;
    out.color[v] = c;
    out.color_count = std::max(out.color_count, c + 1);
  }
  return out;
}

}  // namespace ratnash
