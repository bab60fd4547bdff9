// Copyright 2026 The clsynth Authors. All Rights Reserved.
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

#include "cli.hpp"

#include <CLI11.hpp>

#include <cctype>
#include <fstream>
#include <optional>
#include <set>
#include <sstream>

#include "clsynth/ain_synth.hpp"
#include "clsynth/emit.hpp"
#include "clsynth/errors.hpp"
#include "clsynth/inhabitation.hpp"
#include "clsynth/repository.hpp"
#include "clsynth/solutions.hpp"
#include "clsynth/subtyping.hpp"
#include "clsynth/type_syntax.hpp"

namespace clsynth::cli {

std::chrono::milliseconds parse_duration(std::string_view text) {
  std::string_view unit = text;
  double value = 0;
  std::size_t digits = 0;
  while (digits < text.size() && (std::isdigit(static_cast<unsigned char>(text[digits])) || text[digits] == '.')) {
    ++digits;
  }
  if (digits == 0) throw Error("invalid duration '" + std::string(text) + "'");
  try {
    value = std::stod(std::string(text.substr(0, digits)));
  } catch (const std::exception&) {
    throw Error("invalid duration '" + std::string(text) + "'");
  }
  unit = text.substr(digits);
  double ms = 0;
  if (unit.empty() || unit == "s") {
    ms = value * 1000;
  } else if (unit == "ms") {
    ms = value;
  } else if (unit == "m") {
    ms = value * 60000;
  } else {
    throw Error("invalid duration unit '" + std::string(unit) + "'");
  }
  return std::chrono::milliseconds(static_cast<long long>(ms));
}

namespace {

struct SearchFlags {
  std::string repo;
  std::string goal;
  std::string mode = "bcl0";
  std::size_t max_size = 10;
  std::uint64_t subst_cap = std::uint64_t{1} << 20;
  std::string timeout = "60s";
  unsigned jobs = 1;

  void attach(CLI::App* app, bool with_goal = true) {
    app->add_option("--repo", repo, "repository file (.clr)")->required();
    if (with_goal) app->add_option("--goal", goal, "goal type")->required();
    app->add_option("--mode", mode, "fcl or bcl0")->check(CLI::IsMember({"fcl", "bcl0"}));
    app->add_option("--max-size", max_size, "largest term size to enumerate");
    app->add_option("--subst-cap", subst_cap, "cap on the substitution space");
    app->add_option("--timeout", timeout, "search deadline, e.g. 500ms, 2s, 1m; 0 disables");
    app->add_option("--jobs", jobs, "parallelism of the search")->check(CLI::Range(1u, 1024u));
  }

  SearchConfig config() const {
    SearchConfig cfg;
    cfg.mode = parse_mode(mode);
    cfg.subst_cap = subst_cap;
    cfg.timeout = parse_duration(timeout);
    cfg.parallelism = jobs;
    return cfg;
  }
};

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void print_grammar(const TreeGrammar& g, std::ostream& out) {
  const auto prod = productive(g);
  for (std::size_t i = 0; i < g.nonterminals.size(); ++i) {
    const auto& nt = g.nonterminals[i];
    out << '#' << i << (i == g.start ? "*" : "") << ' ' << to_string(nt.goal) << (prod[i] ? "" : "  (empty)")
        << '\n';
    for (const auto& p : nt.productions) {
      out << "    ::= " << p.combinator;
      if (p.variadic) {
        out << "(#" << p.args[0] << "...)";
      } else if (!p.args.empty()) {
        out << '(';
        for (std::size_t k = 0; k < p.args.size(); ++k) out << (k ? ", #" : "#") << p.args[k];
        out << ')';
      }
      out << '\n';
    }
  }
}

std::set<std::string> split_contexts(const std::string& text) {
  std::set<std::string> out;
  std::string item;
  std::istringstream in(text);
  while (std::getline(in, item, ',')) {
    const auto b = item.find_first_not_of(" \t");
    const auto e = item.find_last_not_of(" \t");
    if (b != std::string::npos) out.insert(item.substr(b, e - b + 1));
  }
  return out;
}

// Top-level net with every transition realized by its first solution.
std::optional<Realization> resolved_net(const GuiRepository& gr, const std::string& ain,
                                        const std::vector<TransitionResult>& results) {
  auto net = std::make_shared<ResolvedNet>();
  net->base = *gr.find_ain(ain);
  for (const auto& r : results) {
    if (r.realizations.empty()) return std::nullopt;
    net->realization.emplace(r.transition.id, r.realizations.front());
  }
  return Realization(std::shared_ptr<const ResolvedNet>(std::move(net)));
}

int no_inhabitants(std::ostream& err) {
  err << "no inhabitants\n";
  return 1;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Composition synthesis by type inhabitation", "clsynth"};
  app.require_subcommand(1);

  std::string repo_path, lhs, rhs;
  auto* subtype = app.add_subcommand("subtype", "decide lhs <= rhs");
  subtype->add_option("--repo", repo_path, "repository supplying the taxonomy");
  subtype->add_option("--lhs", lhs, "candidate subtype")->required();
  subtype->add_option("--rhs", rhs, "candidate supertype")->required();

  std::string type_text;
  auto* organize_cmd = app.add_subcommand("organize", "print the paths of a type");
  organize_cmd->add_option("--type", type_text, "type to organize")->required();

  SearchFlags search;
  std::string format = "terms";
  auto* inhabit_cmd = app.add_subcommand("inhabit", "build the solution grammar of a goal");
  search.attach(inhabit_cmd);
  inhabit_cmd->add_option("--format", format, "terms, grammar, json or dot")->check(CLI::IsMember({"terms", "grammar", "json", "dot"}));

  std::size_t bound = 10;
  auto* analyze_cmd = app.add_subcommand("analyze", "emptiness, finiteness, uniqueness and counts");
  search.attach(analyze_cmd);
  analyze_cmd->add_option("--bound", bound, "size bound for the count");

  bool as_json = false;
  auto* enumerate_cmd = app.add_subcommand("enumerate", "list terms in size order");
  search.attach(enumerate_cmd);
  enumerate_cmd->add_flag("--json", as_json, "one JSON term per line");

  std::string gui_path, ain_name, ctx_text, gui_format = "text";
  bool no_uc = false;
  auto* gui_cmd = app.add_subcommand("gui-synth", "realize the transitions of an AIN");
  gui_cmd->add_option("--gui-repo", gui_path, "GUI repository file (.gar)")->required();
  gui_cmd->add_option("--ain", ain_name, "AIN whose transitions are realized")->required();
  gui_cmd->add_option("--ctx", ctx_text, "usage contexts, comma separated")->required();
  gui_cmd->add_option("--format", gui_format, "text, json or dot")->check(CLI::IsMember({"text", "json", "dot"}));
  gui_cmd->add_flag("--no-uc", no_uc, "ignore usage contexts");
  gui_cmd->add_option("--max-size", search.max_size, "largest term size to enumerate");
  gui_cmd->add_option("--timeout", search.timeout, "deadline per query");
  gui_cmd->add_option("--jobs", search.jobs, "parallelism of the search")->check(CLI::Range(1u, 1024u));

  std::string grammar_json;
  auto* dot_cmd = app.add_subcommand("dot", "render a grammar or a resolved net as DOT");
  dot_cmd->add_option("--grammar", grammar_json, "grammar JSON file");
  dot_cmd->add_option("--repo", search.repo, "repository file (.clr)");
  dot_cmd->add_option("--goal", search.goal, "goal type");
  dot_cmd->add_option("--mode", search.mode)->check(CLI::IsMember({"fcl", "bcl0"}));
  dot_cmd->add_option("--gui-repo", gui_path, "GUI repository file (.gar)");
  dot_cmd->add_option("--ain", ain_name, "AIN to assemble");
  dot_cmd->add_option("--ctx", ctx_text, "usage contexts, comma separated");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    if (subtype->parsed()) {
      Repository repo = repo_path.empty() ? Repository{} : load_repository(repo_path);
      const bool yes = is_subtype(repo.taxonomy(), parse_type(lhs), parse_type(rhs));
      out << (yes ? "true" : "false") << '\n';
      return yes ? 0 : 1;
    }
    if (organize_cmd->parsed()) {
      const auto o = organize(parse_type(type_text));
      for (const auto& p : o.paths) out << to_string(p) << '\n';
      return o.paths.empty() ? 1 : 0;
    }
    if (inhabit_cmd->parsed() || analyze_cmd->parsed() || enumerate_cmd->parsed()) {
      const Repository repo = load_repository(search.repo);
      const TreeGrammar g = inhabit(repo, parse_type(search.goal), search.config());
      const bool empty = is_empty(g);
      if (analyze_cmd->parsed()) {
        out << "empty=" << (empty ? "true" : "false") << " finite=" << (is_finite(g) ? "true" : "false")
            << " unique=" << (is_unique(g) ? "true" : "false") << " count<=" << bound << '=' << count_up_to(g, bound)
            << '\n';
        return empty ? 1 : 0;
      }
      if (inhabit_cmd->parsed() && format != "terms") {
        if (format == "grammar") print_grammar(g, out);
        if (format == "json") out << grammar_to_json(g) << '\n';
        if (format == "dot") out << grammar_to_dot(g);
        return empty ? 1 : 0;
      }
      const auto terms = enumerate(g, search.max_size);
      for (const auto& t : terms) out << (as_json ? term_to_json(t) : to_string(t)) << '\n';
      if (terms.empty()) return no_inhabitants(err);
      return 0;
    }
    if (gui_cmd->parsed() || (dot_cmd->parsed() && !gui_path.empty())) {
      if (ain_name.empty() || ctx_text.empty()) throw Error("--ain and --ctx are required with --gui-repo");
      const GuiRepository gr = load_gui_repository(gui_path);
      GuiSynthConfig cfg;
      cfg.search.timeout = parse_duration(search.timeout);
      cfg.search.parallelism = search.jobs;
      cfg.size_bound = search.max_size;
      cfg.translation.usage_contexts = !no_uc;
      const auto results = synthesize_gui(gr, ain_name, split_contexts(ctx_text), cfg);
      const auto net = resolved_net(gr, ain_name, results);
      if (dot_cmd->parsed() || gui_format == "dot") {
        if (!net) return no_inhabitants(err);
        out << net_to_dot(*net);
        return 0;
      }
      if (gui_format == "json") {
        std::ostringstream body;
        body << "{\"ain\": \"" << ain_name << "\", \"transitions\": [";
        for (std::size_t j = 0; j < results.size(); ++j) {
          const auto& r = results[j];
          body << (j ? ", " : "") << "{\"id\": \"" << r.transition.id << "\", \"interaction\": \""
               << r.transition.interaction << "\", \"realizations\": [";
          for (std::size_t k = 0; k < r.realizations.size(); ++k) {
            body << (k ? ", " : "") << net_to_json(r.realizations[k], -1);
          }
          body << "]}";
        }
        body << "], \"resolved\": " << (net ? net_to_json(*net, -1) : "null") << "}";
        out << body.str() << '\n';
      } else {
        for (const auto& r : results) {
          out << r.transition.id << " (" << r.transition.interaction << "): ";
          if (!r.realizable()) {
            out << "unrealizable\n";
            continue;
          }
          out << r.terms.size() << (r.terms.size() == 1 ? " realization\n" : " realizations\n");
          for (const auto& t : r.terms) out << "  " << to_string(t) << '\n';
        }
      }
      if (!net) {
        err << "some transitions are unrealizable\n";
        return 1;
      }
      return 0;
    }
    if (dot_cmd->parsed()) {
      TreeGrammar g;
      if (!grammar_json.empty()) {
        g = grammar_from_json(read_file(grammar_json));
      } else if (!search.repo.empty() && !search.goal.empty()) {
        g = inhabit(load_repository(search.repo), parse_type(search.goal), search.config());
      } else {
        throw Error("dot needs --grammar, --repo with --goal, or --gui-repo with --ain and --ctx");
      }
      out << grammar_to_dot(g);
      return is_empty(g) ? 1 : 0;
    }
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }
  return 2;
}

}  // namespace clsynth::cli
