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

#include <string>

#include "pebbling/error.hpp"
#include "pebbling/solver.hpp"

namespace pebbling {

namespace {

void require_fuse(std::size_t l, std::size_t n) {
  if (l < 2 || n < 3 || n <= l) {
    throw Error(Errc::out_of_range, "fuse F_l(n) needs l >= 2, n >= 3 and n > l; got l=" +
                                        std::to_string(l) + " n=" + std::to_string(n));
  }
}

}  // namespace

Count gamma_complete(std::size_t n) {
  if (n < 1) {
    throw Error(Errc::out_of_range, "complete graph needs n >= 1");
  }
  return checked::mul(2, n) - 1;
}

Count gamma_complete_w(const WeightFunction& w) {
  if (w.order() < 1) {
    throw Error(Errc::out_of_range, "weight function is empty");
  }
  if (!w.is_positive()) {
    throw Error(Errc::nonpositive_weight, "complete-graph formula needs positive weights");
  }
  return checked::mul(2, w.total()) - w.min();
}

Count gamma_path(std::size_t n) {
  if (n < 1) {
    throw Error(Errc::out_of_range, "path needs n >= 1");
  }
  if (n > 62) {
    throw Error(Errc::overflow, "2^" + std::to_string(n) + " exceeds 2^62");
  }
  return checked::pow2(static_cast<unsigned>(n)) - 1;
}

Count gamma_star(std::size_t n) {
  if (n < 2) {
    throw Error(Errc::out_of_range, "star formula needs n >= 2");
  }
  return checked::mul(4, n) - 5;
}

Count gamma_fuse(std::size_t l, std::size_t n) {
  require_fuse(l, n);
  if (l > 62) {
    throw Error(Errc::overflow, "2^" + std::to_string(l) + " exceeds 2^62");
  }
  return checked::mul(n - l + 1, checked::pow2(static_cast<unsigned>(l))) - 1;
}

Count pi_complete(std::size_t n) {
  if (n < 1) {
    throw Error(Errc::out_of_range, "complete graph needs n >= 1");
  }
  return checked::limit(n);
}

Count pi_path(std::size_t n) {
  if (n < 1) {
    throw Error(Errc::out_of_range, "path needs n >= 1");
  }
  if (n > 63) {
    throw Error(Errc::overflow, "2^" + std::to_string(n - 1) + " exceeds 2^62");
  }
  return checked::pow2(static_cast<unsigned>(n - 1));
}

Count pi_fuse(std::size_t l, std::size_t n) {
  require_fuse(l, n);
  if (l > 62) {
    throw Error(Errc::overflow, "2^" + std::to_string(l) + " exceeds 2^62");
  }
  return checked::add(checked::pow2(static_cast<unsigned>(l)), n - l - 1);
}

}  // namespace pebbling
