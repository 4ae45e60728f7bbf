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

#ifndef PEBBLING_TEXT_FORMAT_HPP
#define PEBBLING_TEXT_FORMAT_HPP

#include <iosfwd>
#include <string>

#include "pebbling/graph.hpp"
#include "pebbling/pebble.hpp"

// Newline-delimited ASCII formats. Lines starting with '#' and blank lines are
// ignored everywhere.
//
//   graph:          "n <N>" then one "e <u> <v>" per edge (0-based ids)
//   weights/config: one "<v> <count>" per listed vertex
//   sequence:       one "<from> <to>" per move, in execution order
//
// Parse failures raise Errc::parse with a 1-based line number in the message.
namespace pebbling::text {

Graph read_graph(std::istream& in);
// Unlisted vertices weigh 1.
WeightFunction read_weights(std::istream& in, std::size_t n);
// Unlisted vertices hold 0 pebbles.
Configuration read_configuration(std::istream& in, std::size_t n);
MoveSequence read_sequence(std::istream& in);

void write_graph(std::ostream& out, const Graph& g);
void write_weights(std::ostream& out, const WeightFunction& w);
// Writes only occupied vertices.
void write_configuration(std::ostream& out, const Configuration& c);
void write_sequence(std::ostream& out, const MoveSequence& s);

Graph load_graph(const std::string& path);
WeightFunction load_weights(const std::string& path, std::size_t n);
Configuration load_configuration(const std::string& path, std::size_t n);
MoveSequence load_sequence(const std::string& path);

}  // namespace pebbling::text

#endif  // PEBBLING_TEXT_FORMAT_HPP
