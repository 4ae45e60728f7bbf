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

#ifndef PEBBLING_CHECKED_HPP
#define PEBBLING_CHECKED_HPP

#include <cstdint>

#include "pebbling/error.hpp"

namespace pebbling {

using Count = std::uint64_t;

// Largest pebble count or weight any computation may produce.
inline constexpr Count kCountLimit = Count{1} << 62;

namespace checked {

[[nodiscard]] inline Count limit(Count value) {
  if (value > kCountLimit) {
    throw Error(Errc::overflow, "value exceeds 2^62: " + std::to_string(value));
  }
  return value;
}

[[nodiscard]] inline Count add(Count a, Count b) {
  if (a > kCountLimit || b > kCountLimit - a) {
    throw Error(Errc::overflow, "addition exceeds 2^62");
  }
  return a + b;
}

[[nodiscard]] inline Count mul(Count a, Count b) {
  if (a != 0 && b > kCountLimit / a) {
    throw Error(Errc::overflow, "multiplication exceeds 2^62");
  }
  return limit(a * b);
}

[[nodiscard]] inline Count pow2(unsigned exponent) {
  if (exponent > 62) {
    throw Error(Errc::overflow, "2^" + std::to_string(exponent) + " exceeds 2^62");
  }
  return Count{1} << exponent;
}

}  // namespace checked
}  // namespace pebbling

#endif  // PEBBLING_CHECKED_HPP
