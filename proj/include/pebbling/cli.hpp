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

#ifndef PEBBLING_CLI_HPP
#define PEBBLING_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace pebbling::cli {

// Exit statuses.
inline constexpr int kOk = 0;
inline constexpr int kInvalidInput = 1;
inline constexpr int kCapExceeded = 2;
inline constexpr int kInternalError = 3;

// Runs one command. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace pebbling::cli

#endif  // PEBBLING_CLI_HPP
