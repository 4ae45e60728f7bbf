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

#ifndef PEBBLING_DETAIL_ENUMERATE_HPP
#define PEBBLING_DETAIL_ENUMERATE_HPP

#include <cstddef>
#include <vector>

#include "pebbling/checked.hpp"

namespace pebbling {

// Stars and bars. `visit` receives the count vector and returns false to stop.
template <class Visit>
void for_each_configuration(std::size_t n, Count size, Visit&& visit) {
  if (n == 0) {
    return;
  }
  std::vector<Count> c(n, 0);
  c[n - 1] = size;
  while (true) {
    if (!visit(static_cast<const std::vector<Count>&>(c))) {
      return;
    }
    if (n == 1) {
      return;
    }
    // Bump the rightmost slot left of a nonzero suffix; the suffix minus one
    // moves to the last slot.
    Count suffix = 0;
    std::size_t pos = n - 1;
    bool found = false;
    while (pos > 0) {
      suffix += c[pos];
      --pos;
      if (suffix > 0) {
        found = true;
        break;
      }
    }
    if (!found) {
      return;
    }
    ++c[pos];
    for (std::size_t j = pos + 1; j < n; ++j) {
      c[j] = 0;
    }
    c[n - 1] = suffix - 1;
  }
}

}  // namespace pebbling

#endif  // PEBBLING_DETAIL_ENUMERATE_HPP
