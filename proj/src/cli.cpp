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

#include "pebbling/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <fstream>
#include <json.hpp>
#include <ostream>
#include <sstream>

#include "pebbling/error.hpp"
#include "pebbling/solver.hpp"
#include "pebbling/text_format.hpp"
#include "pebbling/transition.hpp"

namespace pebbling::cli {

namespace {

using nlohmann::ordered_json;

struct Options {
  bool json = false;
  std::string graph;
  std::string config;
  std::string sequence;
  std::string weights;
  std::string witness_out;
  std::string out;
  bool brute = false;
  Count cap = SearchCaps{}.max_pebbles;
  unsigned parallel = 1;
  std::string family;
  std::size_t n = 0;
  std::size_t l = 0;
};

ordered_json moves_json(const MoveSequence& s) {
  auto array = ordered_json::array();
  for (const auto& m : s) {
    array.push_back({m.from, m.to});
  }
  return array;
}

ordered_json counts_json(const Configuration& c) {
  return ordered_json(std::vector<Count>(c.counts().begin(), c.counts().end()));
}

std::string counts_text(const Configuration& c) {
  std::string text;
  for (Vertex v = 0; v < c.order(); ++v) {
    text += (v ? " " : "") + std::to_string(c[v]);
  }
  return text;
}

std::string vertices_text(const std::vector<Vertex>& vs) {
  std::string text;
  for (std::size_t i = 0; i < vs.size(); ++i) {
    text += (i ? " " : "") + std::to_string(vs[i]);
  }
  return text;
}

void write_file(const std::string& path, const std::string& contents) {
  std::ofstream file(path);
  if (!file || !(file << contents)) {
    throw Error(Errc::parse, "cannot write " + path);
  }
}

class Runner {
 public:
  Runner(const Options& opt, std::ostream& out) : opt_(opt), out_(out) {}

  SearchCaps caps() const {
    SearchCaps caps;
    caps.max_pebbles = opt_.cap;
    caps.workers = std::max(1U, opt_.parallel);
    return caps;
  }

  WeightFunction weights(const Graph& g) const {
    return opt_.weights.empty() ? WeightFunction::ones(g.order())
                                : text::load_weights(opt_.weights, g.order());
  }

  ordered_json input() const {
    ordered_json in = ordered_json::object();
    auto add = [&](const char* key, const std::string& value) {
      if (!value.empty()) {
        in[key] = value;
      }
    };
    add("graph", opt_.graph);
    add("config", opt_.config);
    add("sequence", opt_.sequence);
    add("weights", opt_.weights);
    add("family", opt_.family);
    if (opt_.n) in["n"] = opt_.n;
    if (opt_.l) in["l"] = opt_.l;
    return in;
  }

  void emit(const std::string& command, ordered_json result, ordered_json extra = {}) {
    ordered_json doc;
    doc["command"] = command;
    doc["input"] = input();
    doc["result"] = std::move(result);
    if (extra.is_object()) {
      for (auto& [key, value] : extra.items()) {
        doc[key] = value;
      }
    }
    out_ << doc.dump(2) << '\n';
  }

  void gamma() {
    auto g = text::load_graph(opt_.graph);
    auto w = weights(g);
    if (!opt_.brute && is_tree(g) && w.is_positive()) {
      auto tg = gamma_w_tree(g, w);
      if (opt_.json) {
        emit("gamma", {{"gamma", tg.value}, {"method", "tree-formula"}}, {{"argmax", tg.argmax}});
      } else {
        out_ << "gamma = " << tg.value << "\nmethod = tree-formula\nargmax = "
             << vertices_text(tg.argmax) << '\n';
      }
      return;
    }
    auto gb = gamma_brute(g, w, caps());
    if (opt_.json) {
      ordered_json result{{"gamma", gb.value}, {"method", "brute-force"}};
      result["certificate"] = gb.certificate ? counts_json(*gb.certificate) : ordered_json(nullptr);
      emit("gamma", std::move(result));
    } else {
      out_ << "gamma = " << gb.value << "\nmethod = brute-force\n";
      if (gb.certificate) {
        out_ << "certificate = " << counts_text(*gb.certificate) << '\n';
      }
    }
  }

  void coverable(const std::string& command) {
    auto g = text::load_graph(opt_.graph);
    auto w = weights(g);
    auto c = text::load_configuration(opt_.config, g.order());
    const bool tree = !opt_.brute && is_tree(g);
    auto verdict = tree ? tree_coverable(g, w, c) : brute_coverable(g, w, c, caps());
    const char* method = tree ? "leaf-elimination" : "brute-force";
    if (verdict.coverable && !opt_.witness_out.empty()) {
      std::ostringstream text;
      text::write_sequence(text, *verdict.witness);
      write_file(opt_.witness_out, text.str());
    }
    if (opt_.json) {
      ordered_json extra = ordered_json::object();
      if (verdict.witness) {
        extra["witness"] = moves_json(*verdict.witness);
      }
      emit(command, {{"coverable", verdict.coverable}, {"method", method}}, std::move(extra));
      return;
    }
    out_ << (verdict.coverable ? "coverable" : "non-coverable") << '\n';
    out_ << "method = " << method << '\n';
    if (verdict.witness) {
      if (command == "solve") {
        text::write_sequence(out_, *verdict.witness);
      } else {
        out_ << "witness = " << verdict.witness->size() << " moves\n";
      }
    }
  }

  void max_noncoverable() {
    auto g = text::load_graph(opt_.graph);
    auto extremal = max_noncoverable_tree(g, weights(g));
    if (opt_.json) {
      emit("max-noncoverable", {{"vertex", extremal.vertex}, {"pebbles", extremal.count}});
    } else {
      out_ << "vertex = " << extremal.vertex << "\npebbles = " << extremal.count << '\n';
    }
  }

  void normalize() {
    auto g = text::load_graph(opt_.graph);
    auto c = text::load_configuration(opt_.config, g.order());
    auto s = text::load_sequence(opt_.sequence);
    auto normalized = eliminate_cycles(g, c, s);
    const auto& r = normalized.report;
    ordered_json report{{"input_len", r.input_len},
                        {"output_len", r.output_len},
                        {"cycles_removed", r.cycles_removed},
                        {"final_before", counts_json(r.final_before)},
                        {"final_after", counts_json(r.final_after)}};
    std::ostringstream sequence_text;
    text::write_sequence(sequence_text, normalized.sequence);
    if (!opt_.out.empty()) {
      write_file(opt_.out, sequence_text.str());
    }
    if (opt_.json) {
      emit("normalize", {{"sequence", moves_json(normalized.sequence)}}, {{"report", report}});
    } else if (opt_.out.empty()) {
      // Keep stdout a valid sequence file.
      out_ << sequence_text.str() << "# report " << report.dump() << '\n';
    } else {
      out_ << report.dump() << '\n';
    }
  }

  void ratio() {
    RatioReport report;
    if (opt_.family == "fuse") {
      report = fuse_ratio(opt_.l, opt_.n);
    } else if (!opt_.family.empty()) {
      report = covering_ratio(family_graph(), caps());
    } else {
      report = covering_ratio(text::load_graph(opt_.graph), caps());
    }
    if (opt_.json) {
      emit("ratio", {{"gamma", report.gamma},
                     {"pi", report.pi},
                     {"ratio", report.ratio.str()},
                     {"gamma_method", report.gamma_method},
                     {"pi_method", report.pi_method}});
    } else {
      out_ << "gamma = " << report.gamma << " (" << report.gamma_method << ")\npi = " << report.pi
           << " (" << report.pi_method << ")\nratio = " << report.ratio.str() << '\n';
    }
  }

  void probe() {
    auto g = text::load_graph(opt_.graph);
    auto p = probe_simple_maximal(g, weights(g), caps());
    if (opt_.json) {
      auto list = ordered_json::array();
      for (const auto& c : p.maximal_noncoverable) {
        list.push_back(counts_json(c));
      }
      emit("probe-simple", {{"gamma", p.gamma},
                            {"maximal_noncoverable", list},
                            {"any_simple", p.any_simple},
                            {"all_simple", p.all_simple}});
      return;
    }
    out_ << "gamma = " << p.gamma << '\n';
    out_ << "maximal non-coverable configurations: " << p.maximal_noncoverable.size() << '\n';
    for (const auto& c : p.maximal_noncoverable) {
      out_ << "  " << counts_text(c) << (c.is_simple() ? "  (simple)" : "") << '\n';
    }
    out_ << "any_simple = " << (p.any_simple ? "true" : "false") << '\n';
    out_ << "all_simple = " << (p.all_simple ? "true" : "false") << '\n';
  }

  Graph family_graph() const {
    if (opt_.family == "path") return make_path(opt_.n);
    if (opt_.family == "star") return make_star(opt_.n);
    if (opt_.family == "complete") return make_complete(opt_.n);
    if (opt_.family == "fuse") return make_fuse(opt_.l, opt_.n);
    throw Error(Errc::parse, "unknown family '" + opt_.family + "'");
  }

  void family() {
    auto g = family_graph();
    std::ostringstream text;
    text::write_graph(text, g);
    if (!opt_.out.empty()) {
      write_file(opt_.out, text.str());
    }
    if (opt_.json) {
      auto edges = ordered_json::array();
      for (auto [u, v] : g.edges()) {
        edges.push_back({u, v});
      }
      emit("family", {{"n", g.order()}, {"edges", edges}});
    } else if (opt_.out.empty()) {
      out_ << text.str();
    }
  }

 private:
  const Options& opt_;
  std::ostream& out_;
};

int exit_code(Errc code) {
  switch (code) {
    case Errc::cap_exceeded: return kCapExceeded;
    case Errc::contract_violation: return kInternalError;
    default: return kInvalidInput;
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options opt;
  CLI::App app{"Cover pebbling toolkit"};
  app.require_subcommand(1, 1);

  auto json_flag = [&](CLI::App* sub) {
    sub->add_flag("--json", opt.json, "Structured output");
  };
  auto weights_opt = [&](CLI::App* sub) {
    sub->add_option("--weights", opt.weights, "Weights file (unlisted vertices weigh 1)");
  };
  auto search_opts = [&](CLI::App* sub) {
    sub->add_option("--cap", opt.cap, "Pebble cap for brute-force search");
    sub->add_option("--parallel", opt.parallel, "Enumeration worker threads")
        ->check(CLI::Range(1U, 256U));
  };

  auto* gamma = app.add_subcommand("gamma", "Cover pebbling number");
  gamma->add_option("graph", opt.graph)->required();
  weights_opt(gamma);
  gamma->add_flag("--brute", opt.brute, "Force exhaustive search");
  search_opts(gamma);
  json_flag(gamma);

  std::vector<CLI::App*> cover_commands;
  for (const char* name : {"coverable", "solve"}) {
    auto* sub = app.add_subcommand(name, "Decide coverability of a configuration");
    sub->add_option("graph", opt.graph)->required();
    sub->add_option("config", opt.config)->required();
    weights_opt(sub);
    sub->add_option("--witness", opt.witness_out, "Write the witness sequence here");
    sub->add_flag("--brute", opt.brute, "Force exhaustive search");
    search_opts(sub);
    json_flag(sub);
    cover_commands.push_back(sub);
  }

  auto* extremal = app.add_subcommand("max-noncoverable", "Largest non-coverable configuration on a tree");
  extremal->add_option("graph", opt.graph)->required();
  weights_opt(extremal);
  json_flag(extremal);

  auto* normalize = app.add_subcommand("normalize", "Remove directed cycles from a move sequence");
  normalize->add_option("graph", opt.graph)->required();
  normalize->add_option("config", opt.config)->required();
  normalize->add_option("sequence", opt.sequence)->required();
  normalize->add_option("--out", opt.out, "Write the normalized sequence here");
  json_flag(normalize);

  auto* ratio = app.add_subcommand("ratio", "Covering ratio gamma/pi");
  ratio->add_option("graph", opt.graph);
  ratio->add_option("--family", opt.family)
      ->check(CLI::IsMember({"path", "star", "complete", "fuse"}));
  ratio->add_option("--n", opt.n);
  ratio->add_option("--l", opt.l);
  search_opts(ratio);
  json_flag(ratio);

  auto* probe = app.add_subcommand("probe-simple", "Check whether some largest non-coverable configuration is simple");
  probe->add_option("graph", opt.graph)->required();
  weights_opt(probe);
  search_opts(probe);
  json_flag(probe);

  auto* family = app.add_subcommand("family", "Generate a family member");
  family->add_option("kind", opt.family)
      ->required()
      ->check(CLI::IsMember({"path", "star", "complete", "fuse"}));
  family->add_option("--n", opt.n)->required();
  family->add_option("--l", opt.l);
  family->add_option("--out", opt.out, "Write the graph here");
  json_flag(family);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    std::ostringstream help;
    int code = app.exit(e, help, help);
    (code == 0 ? out : err) << help.str();
    return code == 0 ? kOk : kInvalidInput;
  }

  try {
    if (ratio->parsed() && opt.graph.empty() == opt.family.empty()) {
      throw Error(Errc::parse, "ratio takes either a graph file or --family");
    }
    if (opt.cap > kCountLimit) {
      throw Error(Errc::overflow, "cap exceeds 2^62");
    }
    Runner runner(opt, out);
    if (gamma->parsed()) {
      runner.gamma();
    } else if (cover_commands[0]->parsed()) {
      runner.coverable("coverable");
    } else if (cover_commands[1]->parsed()) {
      runner.coverable("solve");
    } else if (extremal->parsed()) {
      runner.max_noncoverable();
    } else if (normalize->parsed()) {
      runner.normalize();
    } else if (ratio->parsed()) {
      runner.ratio();
    } else if (probe->parsed()) {
      runner.probe();
    } else if (family->parsed()) {
      runner.family();
    }
  } catch (const Error& e) {
    err << "error (" << to_string(e.code()) << "): " << e.what() << '\n';
    return exit_code(e.code());
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kInternalError;
  }
  return kOk;
}

}  // namespace pebbling::cli
