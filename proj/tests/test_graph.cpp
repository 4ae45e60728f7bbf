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

#include <doctest.h>

#include <random>

#include "pebbling/error.hpp"
#include "pebbling/graph.hpp"
#include "support/oracles.hpp"

using namespace pebbling;

namespace {

Errc code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an error");
  return Errc::parse;
}

}  // namespace

TEST_CASE("construction rejects malformed graphs") {
  CHECK(code_of([] { Graph(3, {{0, 1}, {1, 1}}); }) == Errc::invalid_graph);
  CHECK(code_of([] { Graph(3, {{0, 1}, {1, 2}, {2, 1}}); }) == Errc::invalid_graph);
  CHECK(code_of([] { Graph(3, {{0, 1}}); }) == Errc::invalid_graph);
  CHECK(code_of([] { Graph(2, {{0, 2}}); }) == Errc::invalid_graph);
  CHECK(code_of([] { Graph(0, {}); }) == Errc::invalid_graph);
}

TEST_CASE("adjacency mirrors the edge set") {
  Graph g(4, {{2, 0}, {0, 1}, {3, 2}});
  CHECK(g.edges() == std::vector<Edge>{{0, 1}, {0, 2}, {2, 3}});
  CHECK(g.has_edge(2, 0));
  CHECK(g.has_edge(0, 2));
  CHECK_FALSE(g.has_edge(1, 3));
  CHECK(std::vector<Vertex>(g.neighbors(0).begin(), g.neighbors(0).end()) ==
        std::vector<Vertex>{1, 2});
}

TEST_CASE("all_pairs_distances") {
  auto p3 = all_pairs_distances(make_path(3));
  CHECK(p3(0, 2) == 2);

  auto k4 = all_pairs_distances(make_complete(4));
  for (Vertex u = 0; u < 4; ++u) {
    for (Vertex v = 0; v < 4; ++v) {
      CHECK(k4(u, v) == (u == v ? 0U : 1U));
    }
  }

  // F_3(6): wick 0-1-2, sparks 3,4,5 on vertex 2.
  auto fuse = make_fuse(3, 6);
  auto oracle = testing::floyd_distances(fuse);
  auto dt = all_pairs_distances(fuse);
  for (Vertex spark : {3U, 4U, 5U}) {
    CHECK(oracle[0][spark] == 3);
    CHECK(dt(0, spark) == 3);
  }
}

TEST_CASE("distance tables agree with Floyd-Warshall on random graphs") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    std::size_t n = 1 + trial % 9;
    auto g = testing::random_connected_graph(rng, n, 0.3);
    auto dt = all_pairs_distances(g);
    auto oracle = testing::floyd_distances(g);
    for (Vertex u = 0; u < n; ++u) {
      for (Vertex v = 0; v < n; ++v) {
        REQUIRE(dt(u, v) == oracle[u][v]);
        REQUIRE(dt(u, v) == dt(v, u));
        for (Vertex x = 0; x < n; ++x) {
          REQUIRE(dt(u, v) <= dt(u, x) + dt(x, v));
        }
      }
    }
  }
}

TEST_CASE("is_tree") {
  CHECK(is_tree(make_path(5)));
  CHECK_FALSE(is_tree(make_complete(3)));
  CHECK(is_tree(make_fuse(2, 4)));
  CHECK(is_tree(make_path(1)));
  for (std::size_t n = 3; n <= 7; ++n) {
    CHECK(is_tree(make_star(n)));
    CHECK_FALSE(is_tree(make_complete(n)));
  }
}

TEST_CASE("longest_path_endpoints") {
  CHECK(longest_path_endpoints(make_path(4)) == std::vector<Vertex>{0, 3});
  // S_4 has center 1 and leaves 0, 2, 3.
  CHECK(longest_path_endpoints(make_star(4)) == std::vector<Vertex>{0, 2, 3});
  CHECK(longest_path_endpoints(make_fuse(3, 6)) == std::vector<Vertex>{0, 3, 4, 5});
  CHECK(longest_path_endpoints(make_fuse(3, 6)) ==
        testing::longest_path_endpoints_by_search(make_fuse(3, 6)));
  CHECK(longest_path_endpoints(make_path(1)) == std::vector<Vertex>{0});
  CHECK(code_of([] { longest_path_endpoints(make_complete(3)); }) == Errc::not_a_tree);
}

TEST_CASE("eccentricity characterization matches exhaustive path search on small trees") {
  for (std::size_t n = 1; n <= 8; ++n) {
    for (const auto& t : testing::nonisomorphic_trees(n)) {
      auto ends = longest_path_endpoints(t);
      REQUIRE_FALSE(ends.empty());
      CHECK(ends == testing::longest_path_endpoints_by_search(t));
      auto dt = all_pairs_distances(t);
      CHECK(eccentricity(dt, ends.front()) == testing::longest_path_length_by_search(t));
      if (n >= 2) {
        for (Vertex v : ends) {
          CHECK(t.degree(v) == 1);
        }
      }
    }
  }
}

TEST_CASE("tree enumeration counts match the known sequence") {
  const std::size_t expected[] = {1, 1, 1, 2, 3, 6, 11, 23};
  for (std::size_t n = 1; n <= 8; ++n) {
    CHECK(testing::nonisomorphic_trees(n).size() == expected[n - 1]);
  }
}

TEST_CASE("family generators") {
  CHECK(make_fuse(2, 4) == make_star(4));
  CHECK(make_path(1).order() == 1);
  CHECK(make_path(1).size() == 0);
  CHECK(make_fuse(3, 6).edges() == std::vector<Edge>{{0, 1}, {1, 2}, {2, 3}, {2, 4}, {2, 5}});
  CHECK(make_complete(5).size() == 10);
  CHECK(make_fuse(4, 5) == make_path(5));

  CHECK(code_of([] { make_fuse(1, 4); }) == Errc::out_of_range);
  CHECK(code_of([] { make_fuse(2, 2); }) == Errc::out_of_range);
  CHECK(code_of([] { make_fuse(4, 4); }) == Errc::out_of_range);
  CHECK(code_of([] { make_path(0); }) == Errc::out_of_range);
}
