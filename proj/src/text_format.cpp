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

#include "pebbling/text_format.hpp"

#include <charconv>
#include <fstream>
#include <limits>
#include <istream>
#include <ostream>
#include <sstream>
#include <string_view>

#include "pebbling/error.hpp"

namespace pebbling::text {

namespace {

struct Line {
  std::size_t number;
  std::vector<std::string_view> tokens;
};

class LineReader {
 public:
  explicit LineReader(std::istream& in) : in_(in) {}

  // Next non-blank, non-comment line.
  bool next(Line& line) {
    while (std::getline(in_, buffer_)) {
      ++number_;
      std::string_view view(buffer_);
      auto first = view.find_first_not_of(" \t\r");
      if (first == std::string_view::npos || view[first] == '#') {
        continue;
      }
      line.number = number_;
      line.tokens.clear();
      std::size_t pos = first;
      while (pos < view.size()) {
        auto end = view.find_first_of(" \t\r", pos);
        if (end == std::string_view::npos) {
          end = view.size();
        }
        line.tokens.push_back(view.substr(pos, end - pos));
        pos = view.find_first_not_of(" \t\r", end);
        if (pos == std::string_view::npos) {
          break;
        }
      }
      return true;
    }
    return false;
  }

 private:
  std::istream& in_;
  std::string buffer_;
  std::size_t number_ = 0;
};

[[noreturn]] void fail(std::size_t line, const std::string& message) {
  throw Error(Errc::parse, "line " + std::to_string(line) + ": " + message);
}

std::uint64_t parse_number(std::string_view token, std::size_t line) {
  std::uint64_t value = 0;
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec == std::errc::result_out_of_range) {
    throw Error(Errc::overflow, "line " + std::to_string(line) + ": number too large");
  }
  if (ec != std::errc() || ptr != token.data() + token.size()) {
    fail(line, "expected a nonnegative integer, got '" + std::string(token) + "'");
  }
  return value;
}

Vertex parse_vertex(std::string_view token, std::size_t line, std::size_t n) {
  auto v = parse_number(token, line);
  if (v >= n) {
    fail(line, "vertex " + std::to_string(v) + " out of range (n = " + std::to_string(n) + ")");
  }
  return static_cast<Vertex>(v);
}

Count parse_count(std::string_view token, std::size_t line) {
  auto value = parse_number(token, line);
  if (value > kCountLimit) {
    throw Error(Errc::overflow, "line " + std::to_string(line) + ": count exceeds 2^62");
  }
  return value;
}

std::vector<Count> read_counts(std::istream& in, std::size_t n, Count fill) {
  std::vector<Count> values(n, fill);
  std::vector<bool> listed(n, false);
  LineReader reader(in);
  Line line;
  while (reader.next(line)) {
    if (line.tokens.size() != 2) {
      fail(line.number, "expected '<vertex> <count>'");
    }
    Vertex v = parse_vertex(line.tokens[0], line.number, n);
    if (listed[v]) {
      fail(line.number, "vertex " + std::to_string(v) + " listed twice");
    }
    listed[v] = true;
    values[v] = parse_count(line.tokens[1], line.number);
  }
  return values;
}

std::ifstream open(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw Error(Errc::parse, "cannot open " + path);
  }
  return in;
}

}  // namespace

Graph read_graph(std::istream& in) {
  LineReader reader(in);
  Line line;
  if (!reader.next(line)) {
    throw Error(Errc::parse, "empty graph file");
  }
  if (line.tokens.size() != 2 || line.tokens[0] != "n") {
    fail(line.number, "expected 'n <N>'");
  }
  const auto n = parse_number(line.tokens[1], line.number);
  std::vector<Edge> edges;
  while (reader.next(line)) {
    if (line.tokens.size() != 3 || line.tokens[0] != "e") {
      fail(line.number, "expected 'e <u> <v>'");
    }
    edges.emplace_back(parse_vertex(line.tokens[1], line.number, n),
                       parse_vertex(line.tokens[2], line.number, n));
  }
  return Graph(n, std::move(edges));
}

WeightFunction read_weights(std::istream& in, std::size_t n) {
  return WeightFunction(read_counts(in, n, 1));
}

Configuration read_configuration(std::istream& in, std::size_t n) {
  return Configuration(read_counts(in, n, 0));
}

MoveSequence read_sequence(std::istream& in) {
  MoveSequence s;
  LineReader reader(in);
  Line line;
  while (reader.next(line)) {
    if (line.tokens.size() != 2) {
      fail(line.number, "expected '<from> <to>'");
    }
    auto from = parse_number(line.tokens[0], line.number);
    auto to = parse_number(line.tokens[1], line.number);
    if (from > std::numeric_limits<Vertex>::max() || to > std::numeric_limits<Vertex>::max()) {
      fail(line.number, "vertex id out of range");
    }
    s.push_back({static_cast<Vertex>(from), static_cast<Vertex>(to)});
  }
  return s;
}

void write_graph(std::ostream& out, const Graph& g) {
  out << "n " << g.order() << '\n';
  for (auto [u, v] : g.edges()) {
    out << "e " << u << ' ' << v << '\n';
  }
}

void write_weights(std::ostream& out, const WeightFunction& w) {
  for (Vertex v = 0; v < w.order(); ++v) {
    out << v << ' ' << w[v] << '\n';
  }
}

void write_configuration(std::ostream& out, const Configuration& c) {
  for (Vertex v = 0; v < c.order(); ++v) {
    if (c[v] > 0) {
      out << v << ' ' << c[v] << '\n';
    }
  }
}

void write_sequence(std::ostream& out, const MoveSequence& s) {
  for (const auto& m : s) {
    out << m.from << ' ' << m.to << '\n';
  }
}

Graph load_graph(const std::string& path) {
  auto in = open(path);
  return read_graph(in);
}

WeightFunction load_weights(const std::string& path, std::size_t n) {
  auto in = open(path);
  return read_weights(in, n);
}

Configuration load_configuration(const std::string& path, std::size_t n) {
  auto in = open(path);
  return read_configuration(in, n);
}

MoveSequence load_sequence(const std::string& path) {
  auto in = open(path);
  return read_sequence(in);
}

}  // namespace pebbling::text
