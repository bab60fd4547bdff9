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

#include <gtest/gtest.h>

#include <random>

#include "clsynth/ain_synth.hpp"
#include "clsynth/emit.hpp"
#include "clsynth/errors.hpp"
#include "clsynth/solutions.hpp"
#include "clsynth/type_syntax.hpp"
#include "dot_check.hpp"
#include "support.hpp"

namespace clsynth {
namespace {

Type T(std::string_view s) { return parse_type(s); }

testing::DotGraph checked_dot(const std::string& text) {
  std::string error;
  auto g = testing::parse_dot(text, &error);
  EXPECT_TRUE(g.has_value()) << error << "\n" << text;
  return g.value_or(testing::DotGraph{});
}

std::size_t count_shape(const testing::DotGraph& g, const std::string& shape) {
  std::size_t n = 0;
  for (const auto& [id, attrs] : g.nodes) {
    auto it = attrs.find("shape");
    n += it != attrs.end() && it->second == shape;
  }
  return n;
}

std::size_t dashed_edges(const testing::DotGraph& g) {
  std::size_t n = 0;
  for (const auto& e : g.edges) {
    auto it = e.attrs.find("style");
    n += it != e.attrs.end() && it->second == "dashed";
  }
  return n;
}

TEST(DotChecker, AcceptsAndRejects) {
  EXPECT_TRUE(testing::parse_dot("digraph { a -> b [label=\"x\"]; subgraph cluster_1 { c } }"));
  EXPECT_TRUE(testing::parse_dot("graph g { a -- b -- c; node [shape=box]; x = y }"));
  EXPECT_FALSE(testing::parse_dot("digraph { a -> }"));
  EXPECT_FALSE(testing::parse_dot("digraph { a -- b }"));
  EXPECT_FALSE(testing::parse_dot("digraph { a [label=\"open }"));
  EXPECT_FALSE(testing::parse_dot("digraph { a"));
}

TEST(GrammarDot, CyclicGrammarHasABackEdge) {
  TreeGrammar g = inhabit(parse_repository("comb y : a; comb x : a -> a;"), T("a"));
  auto dot = checked_dot(grammar_to_dot(g));
  EXPECT_TRUE(dot.directed);
  EXPECT_EQ(count_shape(dot, "ellipse"), 1u);
  EXPECT_EQ(count_shape(dot, "box"), 2u);
  EXPECT_EQ(dashed_edges(dot), 1u);
}

TEST(GrammarDot, WindowingIsAcyclic) {
  TreeGrammar g = inhabit(load_repository(testing::data_file("windowing.clr")), T("closed"));
  auto dot = checked_dot(grammar_to_dot(g));
  EXPECT_EQ(count_shape(dot, "ellipse"), g.nonterminals.size());
  // closeWindow, interact, createControls, openWindow, init and the two layouts.
  EXPECT_EQ(count_shape(dot, "box"), 7u);
  EXPECT_EQ(dashed_edges(dot), 0u);
}

TEST(GrammarDot, QuotesAwkwardLabels) {
  TreeGrammar g;
  g.add(T("`say \"hi\"` & b"));
  g.nonterminals[0].productions.push_back({"odd\"name", {}, false, {}});
  checked_dot(grammar_to_dot(g));
}

TEST(NetDot, NestedCluster) {
  auto results = synthesize_gui(load_gui_repository(testing::data_file("meal.gar")), "ViewMeal.ain",
                                {"s", "e", "i"});
  GuiRepository gr = load_gui_repository(testing::data_file("meal.gar"));
  ApplicativeTerm e{"ViewMeal.ain",
                    {results[0].terms.at(0), results[1].terms.at(0), results[2].terms.at(0), results[3].terms.at(0)}};
  auto dot = checked_dot(net_to_dot(assemble(e, gr)));
  EXPECT_EQ(dot.subgraphs.size(), 2u);  // ViewMeal and the nested ViewIngr&Prep
  EXPECT_GE(dot.max_subgraph_depth, 2u);
  EXPECT_EQ(count_shape(dot, "circle"), 4u + 3u);
  EXPECT_EQ(count_shape(dot, "box"), 4u + 2u);
}

TEST(NetDot, SingleLeaf) {
  GuiRepository gr = load_gui_repository(testing::data_file("meal.gar"));
  auto dot = checked_dot(net_to_dot(assemble(parse_term("LargeClock.guif"), gr)));
  EXPECT_EQ(dot.nodes.size(), 1u);
}

TEST(GrammarJson, RoundTrips) {
  std::vector<TreeGrammar> grammars = {
      inhabit(load_repository(testing::data_file("windowing.clr")), T("closed")),
      inhabit(load_repository(testing::data_file("tracking_origin.clr")), T("Radius")),
      inhabit(parse_repository("comb y : a; comb x : a -> a;"), Type::omega()),
  };
  std::mt19937 rng(71);
  testing::RepoShape shape;
  shape.types.variables = {"alpha"};
  shape.types.unary_ctors = {"uc"};
  for (int i = 0; i < 40; ++i) grammars.push_back(inhabit(testing::random_repository(rng, shape), T("a")));
  for (auto& g : grammars) {
    TreeGrammar back = grammar_from_json(grammar_to_json(g));
    back.sort_productions();
    g.sort_productions();
    EXPECT_TRUE(back == g) << grammar_to_json(g);
    EXPECT_EQ(grammar_to_json(back), grammar_to_json(g));
    EXPECT_EQ(back.find(g.nonterminals[g.start].goal), std::optional<std::size_t>{g.start});
  }
}

TEST(GrammarJson, Schema) {
  TreeGrammar g = inhabit(parse_repository("comb y : a; comb x : a -> a;"), T("a"));
  const std::string text = grammar_to_json(g, -1);
  EXPECT_NE(text.find("\"start\":0"), std::string::npos) << text;
  EXPECT_NE(text.find("\"comb\":\"x\""), std::string::npos);
  EXPECT_NE(text.find("\"args\":[0]"), std::string::npos);
  EXPECT_NE(text.find("\"type\":\"a\""), std::string::npos);
}

TEST(GrammarJson, RejectsBadInput) {
  EXPECT_THROW(grammar_from_json("{"), Error);
  EXPECT_THROW(grammar_from_json(R"({"start": 3, "nonterminals": []})"), Error);
  EXPECT_THROW(grammar_from_json(R"({"start": 0, "nonterminals": [{"type": "a", "productions": [{"comb": "x",
               "args": [4]}]}]})"),
               Error);
  EXPECT_THROW(grammar_from_json(R"({"start": 0, "nonterminals": [{"type": "a ->", "productions": []}]})"), Error);
}

TEST(TermJson, RoundTrips) {
  for (const char* s : {"y", "fst(cc2pl(cdn(pos(Tr(u)))))", "f(a, g(b, c), d)"}) {
    ApplicativeTerm e = parse_term(s);
    EXPECT_EQ(term_from_json(term_to_json(e)), e);
  }
  EXPECT_EQ(term_to_json(parse_term("f(x)")), R"({"args":[{"args":[],"head":"x"}],"head":"f"})");
  EXPECT_THROW(term_from_json(R"({"args": []})"), Error);
}

TEST(NetJson, DescribesRealizations) {
  GuiRepository gr = load_gui_repository(testing::data_file("meal.gar"));
  ApplicativeTerm e{"ViewIngr&Prep.ain", {parse_term("ViewIngr.guif"), parse_term("ViewPreparation.guif")}};
  const std::string text = net_to_json(assemble(e, gr), -1);
  EXPECT_NE(text.find("ViewIngr&Prep.ain"), std::string::npos);
  EXPECT_NE(text.find("ViewPreparation.guif"), std::string::npos);
  EXPECT_NE(text.find("viewPrep"), std::string::npos);
}

}  // namespace
}  // namespace clsynth
