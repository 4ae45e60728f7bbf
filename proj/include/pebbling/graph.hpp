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

#ifndef PEBBLING_GRAPH_HPP
#define PEBBLING_GRAPH_HPP

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace pebbling {

using Vertex = std::uint32_t;
using Edge = std::pair<Vertex, Vertex>;

/// Undirected simple connected graph on vertices 0..n-1.
///
/// Construction rejects self-loops, duplicate edges, out-of-range endpoints
/// and disconnected input. Edges are stored normalized (smaller id first) and
/// sorted; neighbor lists are sorted ascending.
class Graph {
 public:
  Graph(std::size_t n, std::vector<Edge> edges);

  std::size_t order() const noexcept { return adjacency_.size(); }
  std::size_t size() const noexcept { return edges_.size(); }
  const std::vector<Edge>& edges() const noexcept { return edges_; }
  std::span<const Vertex> neighbors(Vertex v) const { return adjacency_.at(v); }
  std::size_t degree(Vertex v) const { return adjacency_.at(v).size(); }
  bool has_edge(Vertex u, Vertex v) const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  std::vector<Edge> edges_;
  std::vector<std::vector<Vertex>> adjacency_;
};

/// Hop distances between every pair of vertices.
class DistanceTable {
 public:
  DistanceTable() = default;
  explicit DistanceTable(std::size_t n) : n_(n), dist_(n * n, 0) {}

  std::size_t order() const noexcept { return n_; }
  unsigned operator()(Vertex u, Vertex v) const { return dist_[u * n_ + v]; }
  unsigned& at(Vertex u, Vertex v) { return dist_[u * n_ + v]; }

 private:
  std::size_t n_ = 0;
  std::vector<unsigned> dist_;
};

DistanceTable all_pairs_distances(const Graph& g);

bool is_tree(const Graph& g) noexcept;

unsigned eccentricity(const DistanceTable& dt, Vertex v);

// Vertices whose eccentricity equals the diameter; on a tree these are
// exactly the endpoints of longest paths. Sorted ascending.
std::vector<Vertex> longest_path_endpoints(const Graph& t);

// Family generators. Layouts (0-based ids):
//   path:     0-1-...-(n-1)
//   complete: every pair
//   fuse:     wick 0-1-...-(l-1), sparks l..n-1 each adjacent to l-1
//   star:     the fuse F_2(n), so the center is vertex 1 when n >= 2
Graph make_path(std::size_t n);
Graph make_complete(std::size_t n);
Graph make_star(std::size_t n);
Graph make_fuse(std::size_t l, std::size_t n);

}  // namespace pebbling

#endif  // PEBBLING_GRAPH_HPP
