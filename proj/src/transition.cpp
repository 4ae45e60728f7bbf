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

#include "pebbling/transition.hpp"

#include <algorithm>
#include <deque>
#include <string>

#include "pebbling/error.hpp"

namespace pebbling {

namespace {

constexpr std::size_t kNone = static_cast<std::size_t>(-1);

// Arcs (by index) leaving each vertex, in arc order.
using OutArcs = std::vector<std::vector<std::size_t>>;

// Breadth-first search from `source` to `target` over `out`; returns the arc
// indices of a shortest path, or nothing.
std::optional<std::vector<std::size_t>> find_path(const std::vector<PebblingMove>& arcs,
                                                  const OutArcs& out, Vertex source,
                                                  Vertex target) {
  if (source == target) {
    return std::vector<std::size_t>{};
  }
  std::vector<std::size_t> via(out.size(), kNone);
  std::vector<bool> seen(out.size(), false);
  std::deque<Vertex> queue{source};
  seen[source] = true;
  while (!queue.empty()) {
    Vertex x = queue.front();
    queue.pop_front();
    for (std::size_t a : out[x]) {
      Vertex y = arcs[a].to;
      if (seen[y]) {
        continue;
      }
      seen[y] = true;
      via[y] = a;
      if (y == target) {
        std::vector<std::size_t> path;
        for (Vertex z = target; z != source; z = arcs[via[z]].from) {
          path.push_back(via[z]);
        }
        std::reverse(path.begin(), path.end());
        return path;
      }
      queue.push_back(y);
    }
  }
  return std::nullopt;
}

struct PrefixCycle {
  std::size_t last = 0;             // index of the move that closes the cycle
  std::vector<std::size_t> cycle;   // arc indices, all <= last
};

std::optional<PrefixCycle> shortest_cyclic_prefix(std::size_t n, const MoveSequence& s) {
  OutArcs out(n);
  for (std::size_t i = 0; i < s.size(); ++i) {
    // The prefix [0, i) is acyclic, so a cycle through arc i must close it.
    if (auto path = find_path(s, out, s[i].to, s[i].from)) {
      path->push_back(i);
      return PrefixCycle{i, std::move(*path)};
    }
    out[s[i].from].push_back(i);
  }
  return std::nullopt;
}

// Orders the arcs of an acyclic arc set by repeatedly taking every arc out of
// the lowest-id vertex that has no pending incoming arc.
MoveSequence schedule_sources(std::size_t n, const MoveSequence& arcs) {
  std::vector<std::size_t> indegree(n, 0);
  OutArcs out(n);
  for (std::size_t a = 0; a < arcs.size(); ++a) {
    ++indegree[arcs[a].to];
    out[arcs[a].from].push_back(a);
  }
  std::vector<bool> done(n, false);
  MoveSequence ordered;
  ordered.reserve(arcs.size());
  while (ordered.size() < arcs.size()) {
    Vertex pick = 0;
    bool found = false;
    for (Vertex v = 0; v < n; ++v) {
      if (!done[v] && indegree[v] == 0 && !out[v].empty()) {
        pick = v;
        found = true;
        break;
      }
    }
    if (!found) {
      throw Error(Errc::contract_violation, "remaining prefix moves contain a cycle");
    }
    done[pick] = true;
    for (std::size_t a : out[pick]) {
      ordered.push_back(arcs[a]);
      --indegree[arcs[a].to];
    }
  }
  return ordered;
}

}  // namespace

TransitionDigraph build_transition_digraph(const Graph& g, std::span<const PebblingMove> s) {
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (!g.has_edge(s[i].from, s[i].to)) {
      throw Error(Errc::not_an_edge, "move " + std::to_string(i) + " (" +
                                         std::to_string(s[i].from) + "->" +
                                         std::to_string(s[i].to) + ") is not along an edge");
    }
  }
  return TransitionDigraph(g.order(), MoveSequence(s.begin(), s.end()));
}

std::optional<std::vector<std::size_t>> find_directed_cycle(const TransitionDigraph& t) {
  const auto& arcs = t.arcs();
  OutArcs out(t.order());
  for (std::size_t a = 0; a < arcs.size(); ++a) {
    out[arcs[a].from].push_back(a);
  }

  enum Color : unsigned char { white, gray, black };
  std::vector<Color> color(t.order(), white);
  struct Frame {
    Vertex v;
    std::size_t next;  // position in out[v]
    std::size_t via;   // arc used to enter v, kNone for roots
  };

  for (Vertex root = 0; root < t.order(); ++root) {
    if (color[root] != white) {
      continue;
    }
    std::vector<Frame> stack{{root, 0, kNone}};
    color[root] = gray;
    while (!stack.empty()) {
      Frame& top = stack.back();
      if (top.next == out[top.v].size()) {
        color[top.v] = black;
        stack.pop_back();
        continue;
      }
      std::size_t a = out[top.v][top.next++];
      Vertex y = arcs[a].to;
      if (color[y] == white) {
        color[y] = gray;
        stack.push_back({y, 0, a});
      } else if (color[y] == gray) {
        // Unwind the stack back to y.
        std::vector<std::size_t> cycle{a};
        for (auto it = stack.rbegin(); it != stack.rend() && it->v != y; ++it) {
          cycle.push_back(it->via);
        }
        std::reverse(cycle.begin(), cycle.end());
        return cycle;
      }
    }
  }
  return std::nullopt;
}

NormalizeResult eliminate_cycles(const Graph& g, const Configuration& c0,
                                 std::span<const PebblingMove> s) {
  NormalizeResult result;
  result.report.input_len = s.size();
  result.report.final_before = execute(g, c0, s);

  MoveSequence current(s.begin(), s.end());
  while (auto found = shortest_cyclic_prefix(g.order(), current)) {
    std::vector<bool> in_cycle(found->last + 1, false);
    for (std::size_t a : found->cycle) {
      in_cycle[a] = true;
    }
    MoveSequence rest;
    for (std::size_t i = 0; i < found->last; ++i) {
      if (!in_cycle[i]) {
        rest.push_back(current[i]);
      }
    }
    MoveSequence next = schedule_sources(g.order(), rest);
    next.insert(next.end(), current.begin() + static_cast<std::ptrdiff_t>(found->last) + 1,
                current.end());
    current = std::move(next);
    ++result.report.cycles_removed;
  }

  Configuration after;
  try {
    after = execute(g, c0, current);
  } catch (const IllegalMoveError& e) {
    throw Error(Errc::contract_violation, std::string("normalized sequence is illegal: ") + e.what());
  }
  if (!dominates(after, result.report.final_before)) {
    throw Error(Errc::contract_violation, "normalized sequence ends below the original");
  }
  if (!is_acyclic(build_transition_digraph(g, current))) {
    throw Error(Errc::contract_violation, "normalized sequence still has a cycle");
  }
  result.report.output_len = current.size();
  result.report.final_after = std::move(after);
  result.sequence = std::move(current);
  return result;
}

}  // namespace pebbling
