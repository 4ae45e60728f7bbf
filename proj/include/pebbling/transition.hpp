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

#ifndef PEBBLING_TRANSITION_HPP
#define PEBBLING_TRANSITION_HPP

#include <cstddef>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "pebbling/graph.hpp"
#include "pebbling/pebble.hpp"

namespace pebbling {

/// Directed multigraph with one arc per move, kept in move order.
class TransitionDigraph {
 public:
  TransitionDigraph(std::size_t n, std::vector<PebblingMove> arcs)
      : n_(n), arcs_(std::move(arcs)) {}

  std::size_t order() const noexcept { return n_; }
  const std::vector<PebblingMove>& arcs() const noexcept { return arcs_; }

 private:
  std::size_t n_;
  std::vector<PebblingMove> arcs_;
};

TransitionDigraph build_transition_digraph(const Graph& g, std::span<const PebblingMove> s);

// Indices into t.arcs() of some directed cycle, listed in traversal order.
// Parallel arcs are distinct, so u->v, v->u is a cycle of length two.
std::optional<std::vector<std::size_t>> find_directed_cycle(const TransitionDigraph& t);

inline bool is_acyclic(const TransitionDigraph& t) { return !find_directed_cycle(t).has_value(); }

struct NormalizeReport {
  std::size_t input_len = 0;
  std::size_t output_len = 0;
  std::size_t cycles_removed = 0;
  Configuration final_before;
  Configuration final_after;
};

struct NormalizeResult {
  MoveSequence sequence;
  NormalizeReport report;
};

/// Rewrites a legal move sequence into one whose transition digraph has no
/// directed cycle and whose final configuration is pointwise at least as
/// large. Each round takes the shortest prefix that closes a cycle, schedules
/// the remaining prefix moves source-vertex by source-vertex (lowest id first
/// among vertices with no pending incoming arcs), drops the cycle, and keeps
/// the suffix as is.
///
/// The result is re-executed and checked before it is returned; a failed
/// check raises Errc::contract_violation.
NormalizeResult eliminate_cycles(const Graph& g, const Configuration& c0,
                                 std::span<const PebblingMove> s);

}  // namespace pebbling

#endif  // PEBBLING_TRANSITION_HPP
