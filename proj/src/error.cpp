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

#include "pebbling/error.hpp"

namespace pebbling {

const char* to_string(Errc code) noexcept {
  switch (code) {
    case Errc::parse: return "parse";
    case Errc::invalid_graph: return "invalid-graph";
    case Errc::out_of_range: return "out-of-range";
    case Errc::not_a_tree: return "not-a-tree";
    case Errc::nonpositive_weight: return "nonpositive-weight";
    case Errc::not_an_edge: return "not-an-edge";
    case Errc::insufficient_pebbles: return "insufficient-pebbles";
    case Errc::illegal_move: return "illegal-move";
    case Errc::overflow: return "overflow";
    case Errc::cap_exceeded: return "cap-exceeded";
    case Errc::contract_violation: return "contract-violation";
  }
  return "unknown";
}

}  // namespace pebbling
