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

#include <algorithm>
#include <boost/multiprecision/cpp_int.hpp>
#include <numeric>
#include <string>

#include "pebbling/error.hpp"
#include "pebbling/solver.hpp"

namespace pebbling {

namespace {

using boost::multiprecision::cpp_int;

// Follows vertices with exactly one onward neighbor, starting at `start` and
// moving away from `previous`.
std::vector<Vertex> walk_path(const Graph& g, Vertex start, Vertex previous) {
  std::vector<Vertex> walk{start};
  Vertex at = start;
  while (true) {
    std::vector<Vertex> onward;
    for (Vertex u : g.neighbors(at)) {
      if (u != previous) {
        onward.push_back(u);
      }
    }
    if (onward.size() != 1) {
      break;
    }
    previous = at;
    at = onward.front();
    walk.push_back(at);
  }
  return walk;
}

}  // namespace

Ratio::Ratio(Count numerator, Count denominator) {
  if (numerator == 0 || denominator == 0) {
    throw Error(Errc::out_of_range, "ratio terms must be positive");
  }
  Count d = std::gcd(numerator, denominator);
  num_ = numerator / d;
  den_ = denominator / d;
}

std::string Ratio::str() const { return std::to_string(num_) + "/" + std::to_string(den_); }

FamilyMatch recognize_family(const Graph& g) {
  const std::size_t n = g.order();
  FamilyMatch match;
  if (n >= 3 && g.size() == n * (n - 1) / 2) {
    match.family = GraphFamily::complete;
    for (Vertex v = 0; v < n; ++v) {
      match.labels.push_back(v);
    }
    return match;
  }
  if (!is_tree(g)) {
    return match;
  }
  if (n == 1) {
    match.family = GraphFamily::path;
    match.labels = {0};
    return match;
  }

  std::vector<Vertex> hubs;
  for (Vertex v = 0; v < n; ++v) {
    if (g.degree(v) >= 3) {
      hubs.push_back(v);
    }
  }
  if (hubs.empty()) {
    Vertex end = 0;
    while (g.degree(end) != 1) {
      ++end;
    }
    match.family = GraphFamily::path;
    match.labels = walk_path(g, end, end);
    return match;
  }
  if (hubs.size() != 1) {
    return match;
  }

  const Vertex hub = hubs.front();
  std::vector<Vertex> sparks;
  std::vector<Vertex> inner;
  for (Vertex u : g.neighbors(hub)) {
    (g.degree(u) == 1 ? sparks : inner).push_back(u);
  }
  std::vector<Vertex> wick;
  if (inner.empty()) {
    // Star: one leaf serves as the wick's far end.
    wick = {sparks.front(), hub};
    sparks.erase(sparks.begin());
  } else if (inner.size() == 1) {
    auto arm = walk_path(g, inner.front(), hub);
    if (g.degree(arm.back()) != 1) {
      return match;
    }
    wick.assign(arm.rbegin(), arm.rend());
    wick.push_back(hub);
  } else {
    return match;
  }
  match.family = GraphFamily::fuse;
  match.l = wick.size();
  match.labels = wick;
  match.labels.insert(match.labels.end(), sparks.begin(), sparks.end());
  return match;
}

RatioReport fuse_ratio(std::size_t l, std::size_t n) {
  RatioReport report;
  report.gamma = gamma_fuse(l, n);
  report.pi = pi_fuse(l, n);
  report.ratio = Ratio(report.gamma, report.pi);
  report.gamma_method = "closed-form";
  report.pi_method = "closed-form";
  return report;
}

RatioReport covering_ratio(const Graph& g, const SearchCaps& caps) {
  const std::size_t n = g.order();
  const auto match = recognize_family(g);
  if (match.family == GraphFamily::fuse) {
    return fuse_ratio(match.l, n);
  }

  RatioReport report;
  if (match.family == GraphFamily::complete || match.family == GraphFamily::path) {
    const bool complete = match.family == GraphFamily::complete;
    report.gamma = complete ? gamma_complete(n) : gamma_path(n);
    report.gamma_method = "closed-form";
    const Count known = complete ? pi_complete(n) : pi_path(n);
    if (n <= caps.max_vertices && known <= caps.max_pebbles) {
      report.pi = pebbling_number_brute(g, caps);
      if (report.pi != known) {
        throw Error(Errc::contract_violation, "brute-force pebbling number " +
                                                  std::to_string(report.pi) +
                                                  " disagrees with " + std::to_string(known));
      }
      report.pi_method = "brute-force";
    } else {
      report.pi = known;
      report.pi_method = "closed-form";
    }
  } else {
    if (is_tree(g)) {
      report.gamma = gamma_w_tree(g, WeightFunction::ones(n)).value;
      report.gamma_method = "tree-formula";
    } else {
      report.gamma = gamma_brute(g, WeightFunction::ones(n), caps).value;
      report.gamma_method = "brute-force";
    }
    report.pi = pebbling_number_brute(g, caps);
    report.pi_method = "brute-force";
  }
  report.ratio = Ratio(report.gamma, report.pi);
  return report;
}

bool ratio_exceeds_half_n_minus_lg_n(const Ratio& r, std::size_t n) {
  if (n < 1) {
    throw Error(Errc::out_of_range, "n must be positive");
  }
  // p/q > (n - lg n)/2  <=>  lg n > (nq - 2p)/q  <=>  n^q > 2^(nq - 2p)
  const cpp_int p = r.numerator();
  const cpp_int q = r.denominator();
  const cpp_int exponent = cpp_int(n) * q - 2 * p;
  if (exponent < 0) {
    return true;
  }
  if (exponent == 0) {
    return n > 1;
  }
  if (q > 1'000'000 || exponent > 100'000'000) {
    throw Error(Errc::overflow, "ratio terms too large for exact comparison");
  }
  const auto q_small = q.convert_to<unsigned>();
  const auto e_small = exponent.convert_to<unsigned>();
  return boost::multiprecision::pow(cpp_int(n), q_small) > (cpp_int(1) << e_small);
}

bool ratio_exceeds_fuse_bound(const Ratio& r, std::size_t l, std::size_t n) {
  if (l < 2 || n <= l) {
    throw Error(Errc::out_of_range, "fuse bound needs l >= 2 and n > l");
  }
  const cpp_int two_l = cpp_int(1) << l;
  const cpp_int lhs = cpp_int(r.numerator()) * (cpp_int(n - l) + two_l);
  const cpp_int rhs = cpp_int(r.denominator()) * cpp_int(n - l) * two_l;
  return lhs > rhs;
}

}  // namespace pebbling
