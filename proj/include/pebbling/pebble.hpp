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

#ifndef PEBBLING_PEBBLE_HPP
#define PEBBLING_PEBBLE_HPP

#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

#include "pebbling/checked.hpp"
#include "pebbling/graph.hpp"

namespace pebbling {

/// Pebble counts per vertex.
class Configuration {
 public:
  Configuration() = default;
  explicit Configuration(std::size_t n) : counts_(n, 0) {}
  explicit Configuration(std::vector<Count> counts);
  Configuration(std::initializer_list<Count> counts)
      : Configuration(std::vector<Count>(counts)) {}

  std::size_t order() const noexcept { return counts_.size(); }
  Count operator[](Vertex v) const { return counts_.at(v); }
  void set(Vertex v, Count count) { counts_.at(v) = checked::limit(count); }
  std::span<const Count> counts() const noexcept { return counts_; }

  Count size() const;
  std::vector<Vertex> support() const;
  bool is_simple() const;

  static Configuration simple(std::size_t n, Vertex v, Count count);

  friend bool operator==(const Configuration&, const Configuration&) = default;

 private:
  std::vector<Count> counts_;
};

/// Required pebbles per vertex. The unweighted problem is all ones.
class WeightFunction {
 public:
  WeightFunction() = default;
  explicit WeightFunction(std::vector<Count> weights);
  WeightFunction(std::initializer_list<Count> weights)
      : WeightFunction(std::vector<Count>(weights)) {}

  static WeightFunction ones(std::size_t n) {
    return WeightFunction(std::vector<Count>(n, 1));
  }
  static WeightFunction indicator(std::size_t n, Vertex target);

  std::size_t order() const noexcept { return weights_.size(); }
  Count operator[](Vertex v) const { return weights_.at(v); }
  std::span<const Count> weights() const noexcept { return weights_; }

  Count total() const;
  Count min() const;
  bool is_positive() const noexcept;

  friend bool operator==(const WeightFunction&, const WeightFunction&) = default;

 private:
  std::vector<Count> weights_;
};

struct PebblingMove {
  Vertex from;
  Vertex to;

  friend bool operator==(const PebblingMove&, const PebblingMove&) = default;
};

using MoveSequence = std::vector<PebblingMove>;

Configuration apply_move(const Graph& g, const Configuration& c, PebblingMove m);

// Throws IllegalMoveError carrying the index of the first failing move.
Configuration execute(const Graph& g, const Configuration& c0, std::span<const PebblingMove> s);

bool meets(const Configuration& c, const WeightFunction& w);

// True iff a(v) >= b(v) for every vertex.
bool dominates(const Configuration& a, const Configuration& b);

enum class VertexClass { demand, neutral, supply };

struct Classification {
  VertexClass kind;
  Count amount;  // D(v) for demand, S(v) for supply, 0 for neutral

  friend bool operator==(const Classification&, const Classification&) = default;
};

Classification classify(const Configuration& c, const WeightFunction& w, Vertex v);

}  // namespace pebbling

#endif  // PEBBLING_PEBBLE_HPP
