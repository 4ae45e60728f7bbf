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

#ifndef PEBBLING_SOLVER_HPP
#define PEBBLING_SOLVER_HPP

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "pebbling/graph.hpp"
#include "pebbling/pebble.hpp"

namespace pebbling {

struct CoverVerdict {
  bool coverable = false;
  std::optional<MoveSequence> witness;  // present iff coverable
};

/// Limits for the exhaustive searches. Exceeding any of them raises
/// Errc::cap_exceeded rather than returning an approximate answer.
struct SearchCaps {
  Count max_pebbles = 32;
  std::size_t max_vertices = 8;
  std::size_t max_states = 20'000'000;  // per brute_coverable query
  unsigned workers = 1;                 // enumeration threads
};

// Cover pebbling numbers of the named families.
Count gamma_complete(std::size_t n);
Count gamma_complete_w(const WeightFunction& w);
Count gamma_path(std::size_t n);
Count gamma_star(std::size_t n);
Count gamma_fuse(std::size_t l, std::size_t n);

// Pebbling numbers of the same families.
Count pi_complete(std::size_t n);
Count pi_path(std::size_t n);
Count pi_fuse(std::size_t l, std::size_t n);

// Sum over u of w(u) * 2^d(u,v).
Count s_w(const Graph& g, const WeightFunction& w, const DistanceTable& dt, Vertex v);

struct TreeGamma {
  Count value = 0;
  std::vector<Vertex> argmax;  // ascending
};

// Requires a tree and a positive weight function.
TreeGamma gamma_w_tree(const Graph& t, const WeightFunction& w);

/// Decides w-coverability on a tree by stripping leaves. A leaf with surplus
/// S passes floor(S/2) pebbles to its neighbor; a leaf with demand D adds 2D
/// to its neighbor's requirement. The last vertex decides. The witness lists
/// the upward moves in elimination order followed by the owed downward moves
/// in reverse elimination order, and is re-executed before returning.
///
/// Zero weights are allowed. The default order removes the lowest-id leaf.
CoverVerdict tree_coverable(const Graph& t, const WeightFunction& w, const Configuration& c);

// Same, eliminating vertices in `order`; each entry must be a leaf of the
// remaining tree at its turn, and `order` names n-1 distinct vertices.
CoverVerdict tree_coverable(const Graph& t, const WeightFunction& w, const Configuration& c,
                            std::span<const Vertex> order);

// Memoized depth-first search over reachable configurations.
CoverVerdict brute_coverable(const Graph& g, const WeightFunction& w, const Configuration& c,
                             const SearchCaps& caps = {});

struct GammaBrute {
  Count value = 0;
  // Lexicographically first non-coverable configuration of size value-1.
  std::optional<Configuration> certificate;
};

GammaBrute gamma_brute(const Graph& g, const WeightFunction& w, const SearchCaps& caps = {});

Count pebbling_number_brute(const Graph& g, const SearchCaps& caps = {});

struct ExtremalConfig {
  Vertex vertex = 0;
  Count count = 0;

  Configuration to_configuration(std::size_t n) const {
    return Configuration::simple(n, vertex, count);
  }
};

// Largest non-coverable configuration on a tree: s_w(T)-1 pebbles on the
// lowest-id maximizer of s_w.
ExtremalConfig max_noncoverable_tree(const Graph& t, const WeightFunction& w);

/// Exact positive fraction kept in lowest terms.
class Ratio {
 public:
  Ratio(Count numerator, Count denominator);

  Count numerator() const noexcept { return num_; }
  Count denominator() const noexcept { return den_; }
  std::string str() const;

  friend bool operator==(const Ratio&, const Ratio&) = default;

 private:
  Count num_;
  Count den_;
};

enum class GraphFamily { none, complete, path, fuse };

struct FamilyMatch {
  GraphFamily family = GraphFamily::none;
  std::size_t l = 0;  // wick length for fuses
  // Relabeling taking canonical family ids to the graph's ids.
  std::vector<Vertex> labels;
};

FamilyMatch recognize_family(const Graph& g);

struct RatioReport {
  Count gamma = 0;
  Count pi = 0;
  Ratio ratio{1, 1};
  std::string gamma_method;
  std::string pi_method;
};

/// gamma/pi for `g`. Complete graphs and paths take gamma from their closed
/// forms; their pi is brute forced when within caps and checked against the
/// known value, otherwise the known value is used. Fuses use closed forms for
/// both. Other trees use the tree formula and brute-force pi; other graphs
/// brute force both.
RatioReport covering_ratio(const Graph& g, const SearchCaps& caps = {});

RatioReport fuse_ratio(std::size_t l, std::size_t n);

// Exact test of gamma/pi > (n - lg n)/2.
bool ratio_exceeds_half_n_minus_lg_n(const Ratio& r, std::size_t n);

// Exact test of gamma/pi > (n-l)2^l / (n-l+2^l).
bool ratio_exceeds_fuse_bound(const Ratio& r, std::size_t l, std::size_t n);

struct SimpleProbe {
  Count gamma = 0;
  std::vector<Configuration> maximal_noncoverable;  // lexicographic order
  bool any_simple = false;
  bool all_simple = false;  // false when the list is empty
};

SimpleProbe probe_simple_maximal(const Graph& g, const WeightFunction& w,
                                 const SearchCaps& caps = {});

// Calls `visit` on every configuration of n vertices with exactly `size`
// pebbles, in ascending lexicographic order of count vectors.
template <class Visit>
void for_each_configuration(std::size_t n, Count size, Visit&& visit);

}  // namespace pebbling

#include "pebbling/detail/enumerate.hpp"

#endif  // PEBBLING_SOLVER_HPP
