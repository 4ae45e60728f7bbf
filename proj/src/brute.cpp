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
#include <atomic>
#include <exception>
#include <limits>
#include <mutex>
#include <string>
#include <thread>
#include <unordered_set>

#include "pebbling/error.hpp"
#include "pebbling/solver.hpp"

namespace pebbling {

namespace {

void require_order(std::size_t expected, std::size_t got, const char* what) {
  if (expected != got) {
    throw Error(Errc::out_of_range, std::string(what) + " has " + std::to_string(got) +
                                        " vertices, graph has " + std::to_string(expected));
  }
}

void require_vertex_cap(const Graph& g, const SearchCaps& caps) {
  if (g.order() > caps.max_vertices) {
    throw Error(Errc::cap_exceeded, "graph has " + std::to_string(g.order()) +
                                        " vertices; brute force is capped at " +
                                        std::to_string(caps.max_vertices));
  }
}

// Base-(size+1) encoding of a count vector; every reachable configuration has
// at most `size` pebbles per vertex.
class StateCodec {
 public:
  StateCodec(std::size_t n, Count size) : base_(size + 1) {
    unsigned __int128 span = 1;
    for (std::size_t i = 0; i < n; ++i) {
      span *= base_;
      if (span > std::numeric_limits<std::uint64_t>::max()) {
        throw Error(Errc::cap_exceeded, "configuration space too large to index");
      }
    }
  }

  std::uint64_t encode(const std::vector<Count>& c) const {
    std::uint64_t key = 0;
    for (auto it = c.rbegin(); it != c.rend(); ++it) {
      key = key * base_ + *it;
    }
    return key;
  }

 private:
  std::uint64_t base_;
};

struct Arc {
  Vertex from;
  Vertex to;
};

class CoverSearch {
 public:
  CoverSearch(const Graph& g, const WeightFunction& w, const DistanceTable& dt,
              const SearchCaps& caps)
      : g_(g), w_(w), dt_(dt), caps_(caps), weight_total_(w.total()) {
    for (auto [u, v] : g.edges()) {
      arcs_.push_back({u, v});
      arcs_.push_back({v, u});
    }
  }

  CoverVerdict run(const Configuration& start) {
    std::vector<Count> root(start.counts().begin(), start.counts().end());
    if (satisfied(root)) {
      return {true, MoveSequence{}};
    }
    const Count size = start.size();
    if (hopeless(root, size)) {
      return {false, std::nullopt};
    }
    StateCodec codec(g_.order(), size);
    std::unordered_set<std::uint64_t> visited;
    visited.insert(codec.encode(root));

    struct Frame {
      std::vector<Count> counts;
      std::vector<Arc> moves;
      std::size_t next = 0;
    };
    std::vector<Frame> stack;
    stack.push_back({root, candidate_moves(root), 0});
    while (!stack.empty()) {
      Frame& top = stack.back();
      if (top.next == top.moves.size()) {
        stack.pop_back();
        continue;
      }
      const Arc arc = top.moves[top.next++];
      std::vector<Count> child = top.counts;
      child[arc.from] -= 2;
      child[arc.to] += 1;
      if (!visited.insert(codec.encode(child)).second) {
        continue;
      }
      if (visited.size() > caps_.max_states) {
        throw Error(Errc::cap_exceeded, "search visited more than " +
                                            std::to_string(caps_.max_states) + " configurations");
      }
      if (satisfied(child)) {
        MoveSequence witness;
        for (const auto& frame : stack) {
          const Arc& a = frame.moves[frame.next - 1];
          witness.push_back({a.from, a.to});
        }
        return {true, std::move(witness)};
      }
      const Count child_size = size - stack.size();
      if (hopeless(child, child_size)) {
        continue;
      }
      auto moves = candidate_moves(child);
      stack.push_back({std::move(child), std::move(moves), 0});
    }
    return {false, std::nullopt};
  }

 private:
  bool satisfied(const std::vector<Count>& c) const {
    for (Vertex v = 0; v < c.size(); ++v) {
      if (c[v] < w_[v]) {
        return false;
      }
    }
    return true;
  }

  // Every move adds one pebble somewhere and removes one overall, so filling a
  // total deficit of d needs d moves and leaves size - d pebbles at most.
  bool hopeless(const std::vector<Count>& c, Count size) const {
    Count deficit = 0;
    for (Vertex v = 0; v < c.size(); ++v) {
      if (c[v] < w_[v]) {
        deficit += w_[v] - c[v];
        if (deficit > size) {
          return true;
        }
      }
    }
    return size - deficit < weight_total_;
  }

  // Legal moves, most promising first: toward the nearest deficit, then from
  // the largest surplus.
  std::vector<Arc> candidate_moves(const std::vector<Count>& c) const {
    const std::size_t n = g_.order();
    std::vector<unsigned> to_deficit(n, std::numeric_limits<unsigned>::max());
    for (Vertex v = 0; v < n; ++v) {
      for (Vertex d = 0; d < n; ++d) {
        if (c[d] < w_[d]) {
          to_deficit[v] = std::min(to_deficit[v], dt_(v, d));
        }
      }
    }
    struct Ranked {
      unsigned distance;
      std::int64_t surplus;
      std::size_t index;
    };
    std::vector<Ranked> ranked;
    for (std::size_t i = 0; i < arcs_.size(); ++i) {
      const Arc& a = arcs_[i];
      if (c[a.from] < 2) {
        continue;
      }
      ranked.push_back({to_deficit[a.to],
                        static_cast<std::int64_t>(c[a.from]) - static_cast<std::int64_t>(w_[a.from]),
                        i});
    }
    std::sort(ranked.begin(), ranked.end(), [](const Ranked& x, const Ranked& y) {
      if (x.distance != y.distance) return x.distance < y.distance;
      if (x.surplus != y.surplus) return x.surplus > y.surplus;
      return x.index < y.index;
    });
    std::vector<Arc> moves;
    moves.reserve(ranked.size());
    for (const auto& r : ranked) {
      moves.push_back(arcs_[r.index]);
    }
    return moves;
  }

  const Graph& g_;
  const WeightFunction& w_;
  const DistanceTable& dt_;
  const SearchCaps& caps_;
  Count weight_total_;
  std::vector<Arc> arcs_;
};

CoverVerdict brute_coverable_with(const Graph& g, const WeightFunction& w,
                                  const DistanceTable& dt, const Configuration& c,
                                  const SearchCaps& caps) {
  require_order(g.order(), w.order(), "weight function");
  require_order(g.order(), c.order(), "configuration");
  require_vertex_cap(g, caps);
  if (c.size() > caps.max_pebbles) {
    throw Error(Errc::cap_exceeded, "configuration has " + std::to_string(c.size()) +
                                        " pebbles; brute force is capped at " +
                                        std::to_string(caps.max_pebbles));
  }
  return CoverSearch(g, w, dt, caps).run(c);
}

struct Indexed {
  std::uint64_t index;
  Configuration config;
};

// Lexicographically ordered configurations of `size` pebbles that fail
// `accept`. With `first_only` the scan stops at the earliest failure. Work is
// dealt round-robin to caps.workers threads; the result does not depend on
// the worker count.
template <class Accept>
std::vector<Indexed> failing_configurations(std::size_t n, Count size, const SearchCaps& caps,
                                            bool first_only, const Accept& accept) {
  const unsigned workers = std::max(1U, caps.workers);
  std::atomic<std::uint64_t> cutoff{std::numeric_limits<std::uint64_t>::max()};
  std::mutex mutex;
  std::vector<Indexed> failures;
  std::exception_ptr error;

  auto scan = [&](unsigned worker) {
    try {
      std::uint64_t index = 0;
      for_each_configuration(n, size, [&](const std::vector<Count>& counts) {
        const std::uint64_t mine = index++;
        if (first_only && mine > cutoff.load(std::memory_order_relaxed)) {
          return false;
        }
        if (mine % workers != worker) {
          return true;
        }
        Configuration c(counts);
        if (accept(c)) {
          return true;
        }
        std::lock_guard lock(mutex);
        failures.push_back({mine, std::move(c)});
        if (first_only) {
          std::uint64_t seen = cutoff.load();
          while (mine < seen && !cutoff.compare_exchange_weak(seen, mine)) {
          }
          return false;
        }
        return true;
      });
    } catch (...) {
      std::lock_guard lock(mutex);
      if (!error) {
        error = std::current_exception();
      }
      cutoff.store(0);
    }
  };

  if (workers == 1) {
    scan(0);
  } else {
    std::vector<std::jthread> pool;
    for (unsigned i = 0; i < workers; ++i) {
      pool.emplace_back(scan, i);
    }
  }
  if (error) {
    std::rethrow_exception(error);
  }
  std::sort(failures.begin(), failures.end(),
            [](const Indexed& a, const Indexed& b) { return a.index < b.index; });
  if (first_only && failures.size() > 1) {
    failures.resize(1);
  }
  return failures;
}

}  // namespace

CoverVerdict brute_coverable(const Graph& g, const WeightFunction& w, const Configuration& c,
                             const SearchCaps& caps) {
  require_vertex_cap(g, caps);
  auto dt = all_pairs_distances(g);
  return brute_coverable_with(g, w, dt, c, caps);
}

GammaBrute gamma_brute(const Graph& g, const WeightFunction& w, const SearchCaps& caps) {
  require_order(g.order(), w.order(), "weight function");
  require_vertex_cap(g, caps);
  auto dt = all_pairs_distances(g);
  auto accept = [&](const Configuration& c) {
    return brute_coverable_with(g, w, dt, c, caps).coverable;
  };

  GammaBrute result;
  const Count start = w.total();
  if (start > 0) {
    // Fewer pebbles than the total weight can never meet it.
    Configuration below(g.order());
    below.set(static_cast<Vertex>(g.order() - 1), start - 1);
    result.certificate = below;
  }
  for (Count k = start;; ++k) {
    if (k > caps.max_pebbles) {
      throw Error(Errc::cap_exceeded, "gamma exceeds the pebble cap of " +
                                          std::to_string(caps.max_pebbles));
    }
    auto failing = failing_configurations(g.order(), k, caps, true, accept);
    if (failing.empty()) {
      result.value = k;
      return result;
    }
    result.certificate = std::move(failing.front().config);
  }
}

Count pebbling_number_brute(const Graph& g, const SearchCaps& caps) {
  require_vertex_cap(g, caps);
  auto dt = all_pairs_distances(g);
  std::vector<WeightFunction> targets;
  for (Vertex r = 0; r < g.order(); ++r) {
    targets.push_back(WeightFunction::indicator(g.order(), r));
  }
  auto accept = [&](const Configuration& c) {
    for (Vertex r = 0; r < g.order(); ++r) {
      if (c[r] == 0 && !brute_coverable_with(g, targets[r], dt, c, caps).coverable) {
        return false;
      }
    }
    return true;
  };
  for (Count k = 1;; ++k) {
    if (k > caps.max_pebbles) {
      throw Error(Errc::cap_exceeded, "pebbling number exceeds the pebble cap of " +
                                          std::to_string(caps.max_pebbles));
    }
    if (failing_configurations(g.order(), k, caps, true, accept).empty()) {
      return k;
    }
  }
}

SimpleProbe probe_simple_maximal(const Graph& g, const WeightFunction& w,
                                 const SearchCaps& caps) {
  SimpleProbe probe;
  probe.gamma = gamma_brute(g, w, caps).value;
  if (probe.gamma == 0) {
    return probe;
  }
  auto dt = all_pairs_distances(g);
  auto accept = [&](const Configuration& c) {
    return brute_coverable_with(g, w, dt, c, caps).coverable;
  };
  auto failing = failing_configurations(g.order(), probe.gamma - 1, caps, false, accept);
  for (auto& f : failing) {
    probe.maximal_noncoverable.push_back(std::move(f.config));
  }
  const auto& list = probe.maximal_noncoverable;
  probe.any_simple = std::any_of(list.begin(), list.end(), [](const auto& c) { return c.is_simple(); });
  probe.all_simple =
      !list.empty() && std::all_of(list.begin(), list.end(), [](const auto& c) { return c.is_simple(); });
  return probe;
}

}  // namespace pebbling
