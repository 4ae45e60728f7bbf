// Copyright 2026 The pebbling Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "pebbling/graph.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <string>

#include "pebbling/error.hpp"

namespace pebbling {

namespace {

constexpr std::size_t kMaxOrder = std::size_t{1} << 24;
constexpr unsigned kUnreached = std::numeric_limits<unsigned>::max();

std::string edge_str(Vertex u, Vertex v) {
  return "(" + std::to_string(u) + "," + std::to_string(v) + ")";
}

std::vector<unsigned> bfs(const Graph& g, Vertex source) {
  std::vector<unsigned> dist(g.order(), kUnreached);
  std::deque<Vertex> queue{source};
  dist[source] = 0;
  while (!queue.empty()) {
    Vertex u = queue.front();
    queue.pop_front();
    for (Vertex v : g.neighbors(u)) {
      if (dist[v] == kUnreached) {
        dist[v] = dist[u] + 1;
        queue.push_back(v);
      }
    }
  }
  return dist;
}

std::size_t checked_order(std::size_t n) {
  if (n == 0) {
    throw Error(Errc::invalid_graph, "graph must have at least one vertex");
  }
  if (n > kMaxOrder) {
    throw Error(Errc::invalid_graph, "too many vertices: " + std::to_string(n));
  }
  return n;
}

}  // namespace

Graph::Graph(std::size_t n, std::vector<Edge> edges) : adjacency_(checked_order(n)) {
  for (auto& [u, v] : edges) {
    if (u >= n || v >= n) {
      throw Error(Errc::invalid_graph, "edge " + edge_str(u, v) + " has an endpoint out of range");
    }
    if (u == v) {
      throw Error(Errc::invalid_graph, "self-loop at vertex " + std::to_string(u));
    }
    if (u > v) {
      std::swap(u, v);
    }
  }
  std::sort(edges.begin(), edges.end());
  if (auto dup = std::adjacent_find(edges.begin(), edges.end()); dup != edges.end()) {
    throw Error(Errc::invalid_graph, "duplicate edge " + edge_str(dup->first, dup->second));
  }
  edges_ = std::move(edges);
  for (auto [u, v] : edges_) {
    adjacency_[u].push_back(v);
    adjacency_[v].push_back(u);
  }
  for (auto& list : adjacency_) {
    std::sort(list.begin(), list.end());
  }
  auto dist = bfs(*this, 0);
  if (std::find(dist.begin(), dist.end(), kUnreached) != dist.end()) {
    throw Error(Errc::invalid_graph, "graph is not connected");
  }
}

bool Graph::has_edge(Vertex u, Vertex v) const {
  if (u >= order() || v >= order()) {
    return false;
  }
  const auto& list = adjacency_[u];
  return std::binary_search(list.begin(), list.end(), v);
}

DistanceTable all_pairs_distances(const Graph& g) {
  DistanceTable table(g.order());
  for (Vertex u = 0; u < g.order(); ++u) {
    auto dist = bfs(g, u);
    for (Vertex v = 0; v < g.order(); ++v) {
      table.at(u, v) = dist[v];
    }
  }
  return table;
}

bool is_tree(const Graph& g) noexcept { return g.size() + 1 == g.order(); }

unsigned eccentricity(const DistanceTable& dt, Vertex v) {
  unsigned ecc = 0;
  for (Vertex u = 0; u < dt.order(); ++u) {
    ecc = std::max(ecc, dt(u, v));
  }
  return ecc;
}

std::vector<Vertex> longest_path_endpoints(const Graph& t) {
  if (!is_tree(t)) {
    throw Error(Errc::not_a_tree, "longest_path_endpoints requires a tree");
  }
  auto dt = all_pairs_distances(t);
  std::vector<unsigned> ecc(t.order());
  for (Vertex v = 0; v < t.order(); ++v) {
    ecc[v] = eccentricity(dt, v);
  }
  unsigned diameter = *std::max_element(ecc.begin(), ecc.end());
  std::vector<Vertex> ends;
  for (Vertex v = 0; v < t.order(); ++v) {
    if (ecc[v] == diameter) {
      ends.push_back(v);
    }
  }
  return ends;
}

Graph make_path(std::size_t n) {
  if (n < 1) {
    throw Error(Errc::out_of_range, "path needs n >= 1");
  }
  std::vector<Edge> edges;
  for (Vertex i = 0; i + 1 < n; ++i) {
    edges.emplace_back(i, i + 1);
  }
  return Graph(n, std::move(edges));
}

Graph make_complete(std::size_t n) {
  if (n < 1) {
    throw Error(Errc::out_of_range, "complete graph needs n >= 1");
  }
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      edges.emplace_back(u, v);
    }
  }
  return Graph(n, std::move(edges));
}

Graph make_star(std::size_t n) {
  if (n < 1) {
    throw Error(Errc::out_of_range, "star needs n >= 1");
  }
  if (n < 3) {
    return make_path(n);
  }
  return make_fuse(2, n);
}

Graph make_fuse(std::size_t l, std::size_t n) {
  if (l < 2 || n < 3 || n <= l) {
    throw Error(Errc::out_of_range, "fuse F_l(n) needs l >= 2, n >= 3 and n > l; got l=" +
                                        std::to_string(l) + " n=" + std::to_string(n));
  }
  std::vector<Edge> edges;
  for (Vertex i = 0; i + 1 < l; ++i) {
    edges.emplace_back(i, i + 1);
  }
  const auto tip = static_cast<Vertex>(l - 1);
  for (auto spark = static_cast<Vertex>(l); spark < n; ++spark) {
    edges.emplace_back(tip, spark);
  }
  return Graph(n, std::move(edges));
}

}  // namespace pebbling
