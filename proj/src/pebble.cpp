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

#include "pebbling/pebble.hpp"

#include <algorithm>
#include <string>

#include "pebbling/error.hpp"

namespace pebbling {

namespace {

void check_orders(std::size_t a, std::size_t b, const char* what) {
  if (a != b) {
    throw Error(Errc::out_of_range, std::string(what) + ": vertex counts differ (" +
                                        std::to_string(a) + " vs " + std::to_string(b) + ")");
  }
}

}  // namespace

Configuration::Configuration(std::vector<Count> counts) : counts_(std::move(counts)) {
  for (Count c : counts_) {
    (void)checked::limit(c);
  }
}

Count Configuration::size() const {
  Count total = 0;
  for (Count c : counts_) {
    total = checked::add(total, c);
  }
  return total;
}

std::vector<Vertex> Configuration::support() const {
  std::vector<Vertex> result;
  for (Vertex v = 0; v < counts_.size(); ++v) {
    if (counts_[v] > 0) {
      result.push_back(v);
    }
  }
  return result;
}

bool Configuration::is_simple() const {
  return std::count_if(counts_.begin(), counts_.end(), [](Count c) { return c > 0; }) == 1;
}

Configuration Configuration::simple(std::size_t n, Vertex v, Count count) {
  Configuration c(n);
  c.set(v, count);
  return c;
}

WeightFunction::WeightFunction(std::vector<Count> weights) : weights_(std::move(weights)) {
  for (Count w : weights_) {
    (void)checked::limit(w);
  }
}

WeightFunction WeightFunction::indicator(std::size_t n, Vertex target) {
  std::vector<Count> w(n, 0);
  w.at(target) = 1;
  return WeightFunction(std::move(w));
}

Count WeightFunction::total() const {
  Count total = 0;
  for (Count w : weights_) {
    total = checked::add(total, w);
  }
  return total;
}

Count WeightFunction::min() const {
  if (weights_.empty()) {
    return 0;
  }
  return *std::min_element(weights_.begin(), weights_.end());
}

bool WeightFunction::is_positive() const noexcept {
  return std::all_of(weights_.begin(), weights_.end(), [](Count w) { return w >= 1; });
}

Configuration apply_move(const Graph& g, const Configuration& c, PebblingMove m) {
  check_orders(g.order(), c.order(), "apply_move");
  if (!g.has_edge(m.from, m.to)) {
    throw Error(Errc::not_an_edge, "move " + std::to_string(m.from) + "->" +
                                       std::to_string(m.to) + " is not along an edge");
  }
  if (c[m.from] < 2) {
    throw Error(Errc::insufficient_pebbles, "vertex " + std::to_string(m.from) + " holds " +
                                                std::to_string(c[m.from]) + " pebble(s)");
  }
  Configuration next = c;
  next.set(m.from, c[m.from] - 2);
  next.set(m.to, checked::add(c[m.to], 1));
  return next;
}

Configuration execute(const Graph& g, const Configuration& c0, std::span<const PebblingMove> s) {
  check_orders(g.order(), c0.order(), "execute");
  Configuration c = c0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    try {
      c = apply_move(g, c, s[i]);
    } catch (const Error& e) {
      throw IllegalMoveError(i, e.code(), "move " + std::to_string(i) + ": " + e.what());
    }
  }
  return c;
}

bool meets(const Configuration& c, const WeightFunction& w) {
  check_orders(c.order(), w.order(), "meets");
  for (Vertex v = 0; v < c.order(); ++v) {
    if (c[v] < w[v]) {
      return false;
    }
  }
  return true;
}

bool dominates(const Configuration& a, const Configuration& b) {
  check_orders(a.order(), b.order(), "dominates");
  for (Vertex v = 0; v < a.order(); ++v) {
    if (a[v] < b[v]) {
      return false;
    }
  }
  return true;
}

Classification classify(const Configuration& c, const WeightFunction& w, Vertex v) {
  if (c[v] < w[v]) {
    return {VertexClass::demand, w[v] - c[v]};
  }
  if (c[v] > w[v]) {
    return {VertexClass::supply, c[v] - w[v]};
  }
  return {VertexClass::neutral, 0};
}

}  // namespace pebbling
