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

#include "clsynth/emit.hpp"

#include <functional>
#include <map>
#include <set>
#include <sstream>

#include "clsynth/errors.hpp"
#include "clsynth/type_syntax.hpp"
#include "json.hpp"

namespace clsynth {

namespace {

using nlohmann::json;

std::string dot_escape(std::string_view s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\') out.push_back('\\');
    out.push_back(c);
  }
  return out;
}

json term_json(const ApplicativeTerm& e) {
  json args = json::array();
  for (const auto& a : e.args) args.push_back(term_json(a));
  return json{{"head", e.head}, {"args", std::move(args)}};
}

ApplicativeTerm term_of(const json& j) {
  ApplicativeTerm e{j.at("head").get<std::string>(), {}};
  for (const auto& a : j.value("args", json::array())) e.args.push_back(term_of(a));
  return e;
}

json net_json(const Realization& r) {
  if (const auto* g = std::get_if<GuifLeaf>(&r)) return json{{"guif", g->name}};
  const auto& net = *std::get<std::shared_ptr<const ResolvedNet>>(r);
  json transitions = json::array();
  for (const auto& t : net.base.transitions) {
    transitions.push_back(
        json{{"id", t.id}, {"interaction", t.interaction}, {"realization", net_json(net.realization.at(t.id))}});
  }
  json arcs = json::array();
  for (const auto& [from, to] : net.base.arcs) arcs.push_back(json::array({from, to}));
  return json{{"ain", net.base.name}, {"places", net.base.places}, {"transitions", std::move(transitions)},
              {"arcs", std::move(arcs)}};
}

class NetDot {
 public:
  std::string render(const Realization& r) {
    out_ << "digraph guif_ain {\n  compound=true;\n  rankdir=LR;\n";
    if (const auto* g = std::get_if<GuifLeaf>(&r)) {
      out_ << "  n0 [shape=box, label=\"" << dot_escape(g->name) << "\"];\n";
    } else {
      net(*std::get<std::shared_ptr<const ResolvedNet>>(r), "n", 1);
    }
    out_ << "}\n";
    return out_.str();
  }

 private:
  // Returns the id of a node inside the drawn net, used as a cluster anchor.
  std::string net(const ResolvedNet& n, const std::string& prefix, int depth) {
    const std::string pad(static_cast<std::size_t>(depth) * 2, ' ');
    out_ << pad << "subgraph cluster_" << prefix << " {\n"
         << pad << "  label=\"" << dot_escape(n.base.name) << "\";\n";
    std::string anchor;
    for (const auto& p : n.base.places) {
      const auto id = prefix + "_p_" + std::to_string(ids_++);
      place_ids_[{prefix, p}] = id;
      out_ << pad << "  " << id << " [shape=circle, label=\"" << dot_escape(p) << "\"];\n";
      if (anchor.empty()) anchor = id;
    }
    std::vector<std::pair<std::string, const ResolvedNet*>> nested;
    for (const auto& t : n.base.transitions) {
      const auto id = prefix + "_t_" + std::to_string(ids_++);
      place_ids_[{prefix, t.id}] = id;
      const auto& real = n.realization.at(t.id);
      out_ << pad << "  " << id << " [shape=box, label=\"" << dot_escape(t.id + ": " + t.interaction)
           << (std::get_if<GuifLeaf>(&real) ? "\\n" + dot_escape(std::get<GuifLeaf>(real).name) : "")
           << "\"];\n";
      if (anchor.empty()) anchor = id;
      if (const auto* sub = std::get_if<std::shared_ptr<const ResolvedNet>>(&real)) nested.emplace_back(id, sub->get());
    }
    for (const auto& [from, to] : n.base.arcs) {
      out_ << pad << "  " << place_ids_.at({prefix, from}) << " -> " << place_ids_.at({prefix, to}) << ";\n";
    }
    for (const auto& [tid, sub] : nested) {
      const auto sub_prefix = tid;
      const auto sub_anchor = net(*sub, sub_prefix, depth + 1);
      out_ << pad << "  " << tid << " -> " << sub_anchor << " [style=dashed, lhead=cluster_" << sub_prefix
           << "];\n";
    }
    out_ << pad << "}\n";
    return anchor.empty() ? prefix : anchor;
  }

  std::ostringstream out_;
  std::size_t ids_ = 0;
  std::map<std::pair<std::string, std::string>, std::string> place_ids_;
};

}  // namespace

std::string grammar_to_dot(const TreeGrammar& g) {
  std::ostringstream out;
  out << "digraph grammar {\n";
  for (std::size_t i = 0; i < g.nonterminals.size(); ++i) {
    out << "  n" << i << " [shape=ellipse, label=\"" << dot_escape(to_string(g.nonterminals[i].goal)) << "\""
        << (i == g.start ? ", penwidth=2" : "") << "];\n";
  }
  // Edges into a goal that is on the current DFS path close a cycle.
  std::set<std::pair<std::size_t, std::size_t>> back;
  std::vector<int> state(g.nonterminals.size(), 0);
  std::function<void(std::size_t)> dfs = [&](std::size_t n) {
    state[n] = 1;
    for (const auto& p : g.nonterminals[n].productions) {
      for (auto a : p.args) {
        if (state[a] == 1) {
          back.emplace(n, a);
        } else if (state[a] == 0) {
          dfs(a);
        }
      }
    }
    state[n] = 2;
  };
  for (std::size_t i = 0; i < g.nonterminals.size(); ++i) {
    if (state[i] == 0) dfs(i);
  }
  for (std::size_t i = 0; i < g.nonterminals.size(); ++i) {
    const auto& prods = g.nonterminals[i].productions;
    for (std::size_t j = 0; j < prods.size(); ++j) {
      const auto id = "p" + std::to_string(i) + "_" + std::to_string(j);
      out << "  " << id << " [shape=box, label=\"" << dot_escape(prods[j].combinator)
          << (prods[j].variadic ? " ..." : "") << "\"];\n";
      out << "  n" << i << " -> " << id << ";\n";
      for (std::size_t k = 0; k < prods[j].args.size(); ++k) {
        const auto a = prods[j].args[k];
        out << "  " << id << " -> n" << a << " [label=\"" << k + 1 << "\""
            << (back.count({i, a}) ? ", style=dashed, constraint=false" : "") << "];\n";
      }
    }
  }
  out << "}\n";
  return out.str();
}

std::string net_to_dot(const Realization& r) { return NetDot().render(r); }

std::string grammar_to_json(const TreeGrammar& g, int indent) {
  json nts = json::array();
  for (const auto& nt : g.nonterminals) {
    json prods = json::array();
    for (const auto& p : nt.productions) {
      prods.push_back(json{{"comb", p.combinator}, {"args", p.args}, {"variadic", p.variadic}});
    }
    nts.push_back(json{{"type", to_string(nt.goal)}, {"productions", std::move(prods)}});
  }
  return json{{"start", g.start}, {"nonterminals", std::move(nts)}}.dump(indent);
}

TreeGrammar grammar_from_json(std::string_view text) {
  try {
    const json j = json::parse(text);
    TreeGrammar g;
    for (const auto& nt : j.at("nonterminals")) {
      const auto idx = g.add(parse_type(nt.at("type").get<std::string>()));
      if (idx + 1 != g.nonterminals.size()) throw Error("duplicate nonterminal " + nt.at("type").get<std::string>());
    }
    std::size_t i = 0;
    for (const auto& nt : j.at("nonterminals")) {
      for (const auto& p : nt.at("productions")) {
        Production prod;
        prod.combinator = p.at("comb").get<std::string>();
        prod.args = p.at("args").get<std::vector<std::size_t>>();
        prod.variadic = p.value("variadic", false);
        for (auto a : prod.args) {
          if (a >= g.nonterminals.size()) throw Error("production argument out of range");
        }
        if (prod.variadic && prod.args.size() != 1) throw Error("variadic production needs one argument");
        g.nonterminals[i].productions.push_back(std::move(prod));
      }
      ++i;
    }
    g.start = j.at("start").get<std::size_t>();
    if (g.start >= std::max<std::size_t>(g.nonterminals.size(), 1)) throw Error("start out of range");
    return g;
  } catch (const json::exception& e) {
    throw Error(std::string("malformed grammar JSON: ") + e.what());
  }
}

std::string term_to_json(const ApplicativeTerm& e, int indent) { return term_json(e).dump(indent); }

ApplicativeTerm term_from_json(std::string_view text) {
  try {
    return term_of(json::parse(text));
  } catch (const json::exception& e) {
    throw Error(std::string("malformed term JSON: ") + e.what());
  }
}

std::string net_to_json(const Realization& r, int indent) { return net_json(r).dump(indent); }

}  // namespace clsynth
