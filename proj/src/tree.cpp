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

#include <algorithm>
#include <set>
#include <string>

#include "pebbling/error.hpp"
#include "pebbling/solver.hpp"

namespace pebbling {

namespace {

// Witnesses are materialized move by move; refuse absurd lengths.
constexpr Count kMaxWitnessMoves = Count{1} << 24;

void require_tree(const Graph& t, const char* op) {
  if (!is_tree(t)) {
    throw Error(Errc::not_a_tree, std::string(op) + " requires a tree");
  }
}

void require_order(std::size_t expected, std::size_t got, const char* what) {
  if (expected != got) {
    throw Error(Errc::out_of_range, std::string(what) + " has " + std::to_string(got) +
                                        " vertices, graph has " + std::to_string(expected));
  }
}

// Repeatedly removes the lowest-id leaf. Depends on the tree only.
std::vector<Vertex> lowest_leaf_order(const Graph& t) {
  const std::size_t n = t.order();
  std::vector<std::size_t> degree(n);
  std::set<Vertex> leaves;
  for (Vertex v = 0; v < n; ++v) {
    degree[v] = t.degree(v);
    if (degree[v] == 1) {
      leaves.insert(v);
    }
  }
  std::vector<bool> removed(n, false);
  std::vector<Vertex> order;
  while (order.size() + 1 < n) {
    Vertex v = *leaves.begin();
    leaves.erase(leaves.begin());
    removed[v] = true;
    order.push_back(v);
    for (Vertex u : t.neighbors(v)) {
      if (!removed[u] && --degree[u] == 1) {
        leaves.insert(u);
      }
    }
  }
  return order;
}

struct Elimination {
  Vertex leaf;
  Vertex parent;
  Count up;    // pebbles the leaf sends to its parent
  Count down;  // pebbles the parent owes the leaf
};

}  // namespace

Count s_w(const Graph& g, const WeightFunction& w, const DistanceTable& dt, Vertex v) {
  require_order(g.order(), w.order(), "weight function");
  require_order(g.order(), dt.order(), "distance table");
  Count total = 0;
  for (Vertex u = 0; u < g.order(); ++u) {
    if (w[u] == 0) {
      continue;
    }
    total = checked::add(total, checked::mul(w[u], checked::pow2(dt(u, v))));
  }
  return total;
}

TreeGamma gamma_w_tree(const Graph& t, const WeightFunction& w) {
  require_tree(t, "gamma_w_tree");
  require_order(t.order(), w.order(), "weight function");
  if (!w.is_positive()) {
    throw Error(Errc::nonpositive_weight, "tree formula needs every weight >= 1");
  }
  auto dt = all_pairs_distances(t);
  TreeGamma result;
  for (Vertex v = 0; v < t.order(); ++v) {
    Count value = s_w(t, w, dt, v);
    if (value > result.value || result.argmax.empty()) {
      result.value = value;
      result.argmax = {v};
    } else if (value == result.value) {
      result.argmax.push_back(v);
    }
  }
  return result;
}

CoverVerdict tree_coverable(const Graph& t, const WeightFunction& w, const Configuration& c) {
  require_tree(t, "tree_coverable");
  return tree_coverable(t, w, c, lowest_leaf_order(t));
}

CoverVerdict tree_coverable(const Graph& t, const WeightFunction& w, const Configuration& c,
                            std::span<const Vertex> order) {
  require_tree(t, "tree_coverable");
  require_order(t.order(), w.order(), "weight function");
  require_order(t.order(), c.order(), "configuration");
  const std::size_t n = t.order();
  if (order.size() + 1 != n) {
    throw Error(Errc::out_of_range, "elimination order must name n-1 vertices");
  }

  std::vector<Count> pebbles(c.counts().begin(), c.counts().end());
  std::vector<Count> demand(w.weights().begin(), w.weights().end());
  std::vector<std::size_t> degree(n);
  for (Vertex v = 0; v < n; ++v) {
    degree[v] = t.degree(v);
  }
  std::vector<bool> removed(n, false);
  std::vector<Elimination> steps;
  steps.reserve(order.size());

  for (Vertex v : order) {
    if (v >= n || removed[v] || degree[v] != 1) {
      throw Error(Errc::out_of_range,
                  "vertex " + std::to_string(v) + " is not a leaf at its elimination turn");
    }
    Vertex parent = 0;
    for (Vertex u : t.neighbors(v)) {
      if (!removed[u]) {
        parent = u;
      }
    }
    Elimination step{v, parent, 0, 0};
    if (pebbles[v] > demand[v]) {
      step.up = (pebbles[v] - demand[v]) / 2;
      pebbles[parent] = checked::add(pebbles[parent], step.up);
    } else {
      step.down = demand[v] - pebbles[v];
      demand[parent] = checked::add(demand[parent], checked::mul(2, step.down));
    }
    removed[v] = true;
    --degree[parent];
    steps.push_back(step);
  }

  Vertex root = 0;
  while (removed[root]) {
    ++root;
  }
  CoverVerdict verdict;
  verdict.coverable = pebbles[root] >= demand[root];
  if (!verdict.coverable) {
    return verdict;
  }

  Count total_moves = 0;
  for (const auto& step : steps) {
    total_moves = checked::add(total_moves, checked::add(step.up, step.down));
  }
  if (total_moves > kMaxWitnessMoves) {
    throw Error(Errc::cap_exceeded, "witness would have " + std::to_string(total_moves) + " moves");
  }
  MoveSequence witness;
  witness.reserve(total_moves);
  for (const auto& step : steps) {
    witness.insert(witness.end(), step.up, PebblingMove{step.leaf, step.parent});
  }
  for (auto it = steps.rbegin(); it != steps.rend(); ++it) {
    witness.insert(witness.end(), it->down, PebblingMove{it->parent, it->leaf});
  }

  try {
    if (!meets(execute(t, c, witness), w)) {
      throw Error(Errc::contract_violation, "tree witness does not meet the weights");
    }
  } catch (const IllegalMoveError& e) {
    throw Error(Errc::contract_violation, std::string("tree witness is illegal: ") + e.what());
  }
  verdict.witness = std::move(witness);
  return verdict;
}

ExtremalConfig max_noncoverable_tree(const Graph& t, const WeightFunction& w) {
  auto gamma = gamma_w_tree(t, w);
  if (gamma.value < 2) {
    throw Error(Errc::out_of_range, "no nonempty non-coverable configuration exists");
  }
  ExtremalConfig extremal{gamma.argmax.front(), gamma.value - 1};
  if (tree_coverable(t, w, extremal.to_configuration(t.order())).coverable) {
    throw Error(Errc::contract_violation, "extremal configuration turned out coverable");
  }
  auto ends = longest_path_endpoints(t);
  if (!std::binary_search(ends.begin(), ends.end(), extremal.vertex)) {
    throw Error(Errc::contract_violation, "extremal vertex is not a longest-path endpoint");
  }
  return extremal;
}

}  // namespace pebbling
