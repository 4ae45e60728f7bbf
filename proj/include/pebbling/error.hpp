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

#ifndef PEBBLING_ERROR_HPP
#define PEBBLING_ERROR_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace pebbling {

enum class Errc {
  parse,
  invalid_graph,
  out_of_range,
  not_a_tree,
  nonpositive_weight,
  not_an_edge,
  insufficient_pebbles,
  illegal_move,
  overflow,
  cap_exceeded,
  contract_violation,
};

const char* to_string(Errc code) noexcept;

// All library failures are reported through this type; `code()` selects the
// CLI exit status.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

// Raised by `execute` on the first move that cannot be performed.
class IllegalMoveError : public Error {
 public:
  IllegalMoveError(std::size_t index, Errc cause, const std::string& what)
      : Error(Errc::illegal_move, what), index_(index), cause_(cause) {}

  std::size_t index() const noexcept { return index_; }
  Errc cause() const noexcept { return cause_; }

 private:
  std::size_t index_;
  Errc cause_;
};

}  // namespace pebbling

#endif  // PEBBLING_ERROR_HPP
