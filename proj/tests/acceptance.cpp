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

// Acceptance suite: one line per criterion, nonzero exit if any fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>

#include "pebbling/error.hpp"
#include "pebbling/solver.hpp"
#include "pebbling/transition.hpp"
#include "support/oracles.hpp"

using namespace pebbling;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;

  void fail(const std::string& why) {
    if (ok) {
      detail = why;
    }
    ok = false;
  }
};

// Witnesses from criteria 3, 6 and 9, re-checked by criterion 10.
struct Witness {
  Graph g;
  WeightFunction w;
  Configuration c;
  MoveSequence moves;
};
std::vector<Witness> g_witnesses;

void keep_witness(const Graph& g, const WeightFunction& w, const Configuration& c,
                  const CoverVerdict& v) {
  if (v.witness) {
    g_witnesses.push_back({g, w, c, *v.witness});
  }
}

std::string str(const Configuration& c) {
  std::string s = "(";
  for (Vertex v = 0; v < c.order(); ++v) {
    s += (v ? "," : "") + std::to_string(c[v]);
  }
  return s + ")";
}

int run_criterion(int id, const char* name, double limit_seconds,
                  const std::function<Outcome()>& body) {
  const auto start = std::chrono::steady_clock::now();
  Outcome outcome;
  try {
    outcome = body();
  } catch (const std::exception& e) {
    outcome.fail(std::string("exception: ") + e.what());
  }
  const double seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (seconds > limit_seconds) {
    std::ostringstream why;
    why << "took " << seconds << " s, limit " << limit_seconds << " s";
    outcome.fail(why.str());
  }
  std::printf("[%s] %2d %-58s %8.3f s%s%s\n", outcome.ok ? "PASS" : "FAIL", id, name, seconds,
              outcome.detail.empty() ? "" : "  ", outcome.detail.c_str());
  std::fflush(stdout);
  return outcome.ok ? 0 : 1;
}

Outcome complete_graphs() {
  Outcome o;
  for (std::size_t n = 1; n <= 5; ++n) {
    auto got = gamma_brute(make_complete(n), WeightFunction::ones(n)).value;
    if (got != 2 * n - 1) {
      o.fail("K_" + std::to_string(n) + ": " + std::to_string(got));
    }
  }
  return o;
}

Outcome weighted_complete_graphs() {
  Outcome o;
  for (std::size_t n = 2; n <= 4; ++n) {
    for (unsigned mask = 0; mask < (1U << n); ++mask) {
      std::vector<Count> weights(n);
      for (std::size_t i = 0; i < n; ++i) {
        weights[i] = 1 + ((mask >> i) & 1U);
      }
      WeightFunction w(weights);
      auto got = gamma_brute(make_complete(n), w).value;
      auto expected = 2 * w.total() - w.min();
      if (got != expected || got != gamma_complete_w(w)) {
        o.fail("K_" + std::to_string(n) + " mask " + std::to_string(mask) + ": " +
               std::to_string(got) + " vs " + std::to_string(expected));
      }
    }
  }
  return o;
}

Outcome paths() {
  Outcome o;
  for (std::size_t n = 1; n <= 20; ++n) {
    auto expected = (Count{1} << n) - 1;
    if (gamma_w_tree(make_path(n), WeightFunction::ones(n)).value != expected) {
      o.fail("tree formula on P_" + std::to_string(n));
    }
  }
  for (std::size_t n = 1; n <= 4; ++n) {
    auto p = make_path(n);
    auto w = WeightFunction::ones(n);
    const Count gamma = (Count{1} << n) - 1;
    for_each_configuration(n, gamma, [&](const std::vector<Count>& counts) {
      Configuration c(counts);
      auto v = tree_coverable(p, w, c);
      keep_witness(p, w, c, v);
      if (!v.coverable) {
        o.fail("P_" + std::to_string(n) + " " + str(c) + " not coverable");
      }
      return true;
    });
    auto extremal = Configuration::simple(n, 0, gamma - 1);
    if (tree_coverable(p, w, extremal).coverable) {
      o.fail("P_" + std::to_string(n) + " " + str(extremal) + " coverable");
    }
  }
  return o;
}

Outcome fuses() {
  Outcome o;
  for (std::size_t l = 2; l <= 5; ++l) {
    for (std::size_t n = l + 1; n <= l + 5; ++n) {
      if (n < 3) {
        continue;
      }
      auto got = gamma_w_tree(make_fuse(l, n), WeightFunction::ones(n)).value;
      auto expected = (n - l + 1) * (Count{1} << l) - 1;
      if (got != expected || got != gamma_fuse(l, n)) {
        o.fail("F_" + std::to_string(l) + "(" + std::to_string(n) + "): " + std::to_string(got));
      }
      if (l == 2 && got != 4 * n - 5) {
        o.fail("star S_" + std::to_string(n) + ": " + std::to_string(got));
      }
    }
  }
  return o;
}

Outcome cycle_elimination() {
  Outcome o;
  std::mt19937_64 rng(20240501);
  std::size_t with_cycles = 0;
  std::size_t two_cycles = 0;
  std::size_t longer_cycles = 0;
  for (int trial = 0; trial < 1000; ++trial) {
    std::size_t n = 2 + trial % 5;
    auto g = testing::random_connected_graph(rng, n, 0.5);
    auto c0 = testing::random_configuration(rng, n, 4 + rng() % 24);
    auto s = testing::random_legal_sequence(rng, g, c0, 1 + rng() % 12, 0.6);
    if (auto cycle = find_directed_cycle(build_transition_digraph(g, s))) {
      ++with_cycles;
      ++(cycle->size() == 2 ? two_cycles : longer_cycles);
    }
    auto r = eliminate_cycles(g, c0, s);
    Configuration after;
    try {
      after = execute(g, c0, r.sequence);
    } catch (const IllegalMoveError& e) {
      o.fail("trial " + std::to_string(trial) + ": illegal output");
      continue;
    }
    if (!is_acyclic(build_transition_digraph(g, r.sequence))) {
      o.fail("trial " + std::to_string(trial) + ": output has a cycle");
    }
    if (!dominates(after, execute(g, c0, s))) {
      o.fail("trial " + std::to_string(trial) + ": output ends lower");
    }
  }
  if (with_cycles < 300 || two_cycles == 0 || longer_cycles == 0) {
    o.fail("too few cyclic inputs: " + std::to_string(two_cycles) + " 2-cycles, " +
           std::to_string(longer_cycles) + " longer");
  }
  if (o.ok) {
    o.detail = std::to_string(two_cycles) + " inputs with a 2-cycle, " +
               std::to_string(longer_cycles) + " with a longer one";
  }
  return o;
}

Outcome tree_oracle_equivalence() {
  Outcome o;
  std::mt19937_64 rng(77);
  for (std::size_t n = 1; n <= 5; ++n) {
    // All configurations with at most 9 pebbles.
    std::vector<Configuration> configs;
    for (Count size = 0; size <= 9; ++size) {
      for_each_configuration(n, size, [&](const std::vector<Count>& c) {
        configs.emplace_back(c);
        return true;
      });
    }
    std::size_t weight_count = 1;
    for (std::size_t i = 0; i < n; ++i) {
      weight_count *= 3;
    }
    for (const auto& t : testing::nonisomorphic_trees(n)) {
      for (std::size_t code = 0; code < weight_count; ++code) {
        std::vector<Count> weights(n);
        for (std::size_t i = 0, rest = code; i < n; ++i, rest /= 3) {
          weights[i] = rest % 3;
        }
        WeightFunction w(weights);
        std::vector<const Configuration*> sample;
        for (const auto& c : configs) {
          sample.push_back(&c);
        }
        if (sample.size() > 500) {
          std::shuffle(sample.begin(), sample.end(), rng);
          sample.resize(500);
        }
        for (const auto* c : sample) {
          auto fast = tree_coverable(t, w, *c);
          auto slow = brute_coverable(t, w, *c);
          keep_witness(t, w, *c, fast);
          keep_witness(t, w, *c, slow);
          if (fast.coverable != slow.coverable) {
            o.fail("n=" + std::to_string(n) + " c=" + str(*c) + " disagree");
          }
        }
      }
    }
  }
  return o;
}

Outcome longest_path_maximizers() {
  Outcome o;
  std::mt19937_64 rng(99);
  std::uniform_int_distribution<Count> weight(1, 3);
  for (std::size_t n = 1; n <= 8; ++n) {
    for (const auto& t : testing::nonisomorphic_trees(n)) {
      auto ends = longest_path_endpoints(t);
      for (int trial = 0; trial < 50; ++trial) {
        std::vector<Count> weights(n);
        for (auto& x : weights) {
          x = weight(rng);
        }
        for (Vertex v : gamma_w_tree(t, WeightFunction(weights)).argmax) {
          if (!std::binary_search(ends.begin(), ends.end(), v)) {
            o.fail("n=" + std::to_string(n) + " maximizer " + std::to_string(v));
          }
        }
      }
    }
  }
  return o;
}

Outcome covering_ratios() {
  Outcome o;
  for (std::size_t n = 1; n <= 6; ++n) {
    auto k = covering_ratio(make_complete(n));
    if (pebbling_number_brute(make_complete(n)) != n || k.pi != n ||
        k.ratio != Ratio(2 * n - 1, n)) {
      o.fail("K_" + std::to_string(n) + ": " + k.ratio.str());
    }
    const Count half = Count{1} << (n - 1);
    auto p = covering_ratio(make_path(n));
    if (p.pi != half || p.pi_method != "brute-force" || p.ratio != Ratio(2 * half - 1, half)) {
      o.fail("P_" + std::to_string(n) + ": " + p.ratio.str());
    }
  }
  for (std::size_t l = 2; l <= 4; ++l) {
    const std::size_t n = (std::size_t{1} << l) + l;
    auto f = fuse_ratio(l, n);
    if (!ratio_exceeds_fuse_bound(f.ratio, l, n) || !ratio_exceeds_half_n_minus_lg_n(f.ratio, n)) {
      o.fail("F_" + std::to_string(l) + "(" + std::to_string(n) + "): " + f.ratio.str());
    }
  }
  return o;
}

Outcome nonnegative_counterexample() {
  Outcome o;
  auto k3 = make_complete(3);
  WeightFunction w{1, 0, 0};
  auto probe = probe_simple_maximal(k3, w);
  if (probe.gamma != 3) {
    o.fail("gamma_w = " + std::to_string(probe.gamma));
  }
  if (probe.maximal_noncoverable != std::vector<Configuration>{{0, 1, 1}}) {
    o.fail("unexpected maximal non-coverable set");
  }
  if (probe.any_simple) {
    o.fail("reported a simple maximal configuration");
  }
  for_each_configuration(3, probe.gamma, [&](const std::vector<Count>& counts) {
    Configuration c(counts);
    keep_witness(k3, w, c, brute_coverable(k3, w, c));
    return true;
  });
  return o;
}

Outcome witness_soundness() {
  Outcome o;
  for (const auto& wit : g_witnesses) {
    try {
      if (!meets(execute(wit.g, wit.c, wit.moves), wit.w)) {
        o.fail("witness from " + str(wit.c) + " falls short");
      }
    } catch (const IllegalMoveError& e) {
      o.fail(std::string("illegal witness: ") + e.what());
    }
  }
  if (g_witnesses.empty()) {
    o.fail("no witnesses collected");
  }
  if (o.ok) {
    o.detail = std::to_string(g_witnesses.size()) + " witnesses";
  }
  return o;
}

}  // namespace

int main() {
  int failures = 0;
  failures += run_criterion(1, "gamma(K_n) = 2n-1, n = 1..5", 10, complete_graphs);
  failures += run_criterion(2, "gamma_w(K_n) = 2|w| - min w, n = 2..4, w in {1,2}^n", 60,
                            weighted_complete_graphs);
  failures += run_criterion(3, "gamma(P_n) = 2^n - 1, exhaustive for n <= 4", 10, paths);
  failures += run_criterion(4, "gamma(F_l(n)) = (n-l+1)2^l - 1, stars 4n-5", 1, fuses);
  failures += run_criterion(5, "cycle elimination on 1000 fuzzed sequences", 30, cycle_elimination);
  failures += run_criterion(6, "leaf elimination == exhaustive search, trees n <= 5", 300,
                            tree_oracle_equivalence);
  failures += run_criterion(7, "s_w maximizers are longest-path ends, trees n <= 8", 60,
                            longest_path_maximizers);
  failures += run_criterion(8, "covering ratios of K_n, P_n (n <= 6) and fuses", 60,
                            covering_ratios);
  failures += run_criterion(9, "K_3, w = (1,0,0): unique maximal (0,1,1), not simple", 1,
                            nonnegative_counterexample);
  failures += run_criterion(10, "every collected witness re-executes and meets w", 60,
                            witness_soundness);
  std::printf("%d of 10 criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
