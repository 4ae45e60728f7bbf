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
#include "pebbling/pebble.hpp"
#include "support/oracles.hpp"

using namespace pebbling;

TEST_CASE("configuration size and support") {
  Configuration c{0, 3, 0, 2};
  CHECK(c.size() == 5);
  CHECK(c.support() == std::vector<Vertex>{1, 3});
  CHECK_FALSE(c.is_simple());
  CHECK(Configuration::simple(4, 2, 7).is_simple());
  CHECK_FALSE(Configuration(3).is_simple());
  CHECK_THROWS_AS(Configuration({kCountLimit + 1}), Error);
}

TEST_CASE("weight function summaries") {
  WeightFunction w{2, 1, 3};
  CHECK(w.total() == 6);
  CHECK(w.min() == 1);
  CHECK(w.is_positive());
  CHECK_FALSE(WeightFunction({1, 0, 1}).is_positive());
  CHECK(WeightFunction::indicator(3, 1) == WeightFunction{0, 1, 0});
}

TEST_CASE("apply_move") {
  CHECK(apply_move(make_complete(2), {2, 0}, {0, 1}) == Configuration{0, 1});
  CHECK(apply_move(make_path(3), {4, 0, 0}, {0, 1}) == Configuration{2, 1, 0});

  try {
    (void)apply_move(make_path(3), {1, 0, 0}, {0, 1});
    FAIL("expected insufficient-pebbles");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::insufficient_pebbles);
  }
  try {
    (void)apply_move(make_path(3), {4, 0, 0}, {0, 2});
    FAIL("expected not-an-edge");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::not_an_edge);
  }
}

TEST_CASE("execute") {
  auto p2 = make_path(2);
  CHECK(execute(p2, {2, 1}, MoveSequence{{0, 1}, {1, 0}}) == Configuration{1, 0});
  CHECK(execute(p2, {2, 1}, MoveSequence{}) == Configuration{2, 1});
  CHECK(execute(make_path(3), {6, 0, 0}, MoveSequence{{0, 1}, {0, 1}, {1, 2}}) ==
        Configuration{2, 0, 1});

  try {
    (void)execute(make_path(3), {4, 0, 0}, MoveSequence{{0, 1}, {0, 1}, {0, 1}});
    FAIL("expected an illegal move");
  } catch (const IllegalMoveError& e) {
    CHECK(e.index() == 2);
    CHECK(e.cause() == Errc::insufficient_pebbles);
  }
}

TEST_CASE("meets and classify") {
  CHECK(meets({1, 1, 1}, WeightFunction::ones(3)));
  CHECK_FALSE(meets({2, 0, 1}, WeightFunction::ones(3)));
  CHECK(meets({1, 2}, {1, 2}));

  Configuration c{0, 3, 2};
  WeightFunction w{1, 1, 2};
  CHECK(classify(c, w, 0) == Classification{VertexClass::demand, 1});
  CHECK(classify(c, w, 1) == Classification{VertexClass::supply, 2});
  CHECK(classify(c, w, 2) == Classification{VertexClass::neutral, 0});
}

TEST_CASE("random legal sequences conserve size and compose") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 300; ++trial) {
    std::size_t n = 2 + trial % 5;
    auto g = testing::random_connected_graph(rng, n, 0.4);
    auto c0 = testing::random_configuration(rng, n, 6 + trial % 10);
    MoveSequence s;
    Configuration c = c0;
    for (int step = 0; step < 10; ++step) {
      std::vector<PebblingMove> legal;
      for (auto [u, v] : g.edges()) {
        if (c[u] >= 2) legal.push_back({u, v});
        if (c[v] >= 2) legal.push_back({v, u});
      }
      if (legal.empty()) break;
      auto m = legal[rng() % legal.size()];
      c = apply_move(g, c, m);
      s.push_back(m);
    }
    auto final_c = execute(g, c0, s);
    REQUIRE(final_c == c);
    REQUIRE(final_c.size() == c0.size() - s.size());
    std::size_t cut = s.empty() ? 0 : rng() % (s.size() + 1);
    std::span<const PebblingMove> all(s);
    auto mid = execute(g, c0, all.first(cut));
    REQUIRE(execute(g, mid, all.subspan(cut)) == final_c);

    // meets is monotone under pointwise increase.
    WeightFunction w = WeightFunction::ones(n);
    std::vector<Count> more(final_c.counts().begin(), final_c.counts().end());
    more[rng() % n] += 1;
    if (meets(final_c, w)) {
      REQUIRE(meets(Configuration(more), w));
    }
  }
}
