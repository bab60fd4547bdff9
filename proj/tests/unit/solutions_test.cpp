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
#include "clsynth/errors.hpp"
#include "clsynth/inhabitation.hpp"
#include "clsynth/solutions.hpp"
#include "clsynth/type_syntax.hpp"
#include "support.hpp"

namespace clsynth {
namespace {

Type T(std::string_view s) { return parse_type(s); }

std::vector<std::string> strings(const std::vector<ApplicativeTerm>& ts) {
  std::vector<std::string> out;
  for (const auto& t : ts) out.push_back(to_string(t));
  return out;
}

const char* const kE1 = "closeWindow(interact(createControls(openWindow(init), layoutDesktopPC)))";
const char* const kE2 = "closeWindow(interact(createControls(openWindow(init), layoutPDAPhone)))";

class Grammars : public ::testing::Test {
 protected:
  static TreeGrammar windowing() {
    return inhabit(load_repository(testing::data_file("windowing.clr")), T("closed"));
  }
  static TreeGrammar tracking(const char* file = "tracking.clr") {
    return inhabit(load_repository(testing::data_file(file)), T("Radius"));
  }
  static TreeGrammar cyclic() { return inhabit(parse_repository("comb y : a; comb x : a -> a;"), T("a")); }
  static TreeGrammar empty() { return inhabit(parse_repository("comb x : a;"), T("b")); }
};

TEST_F(Grammars, Emptiness) {
  EXPECT_TRUE(is_empty(empty()));
  EXPECT_FALSE(is_empty(tracking()));
  GuiRepository gr = load_gui_repository(testing::data_file("meal.gar"));
  EXPECT_TRUE(is_empty(inhabit(translate(gr), T("ShowRecipe & uc(p)"))));
}

TEST_F(Grammars, Finiteness) {
  EXPECT_FALSE(is_finite(cyclic()));
  EXPECT_TRUE(is_finite(windowing()));
  EXPECT_TRUE(is_finite(empty()));
  EXPECT_EQ(max_term_size(windowing()), std::optional<std::size_t>{6});
  EXPECT_FALSE(max_term_size(cyclic()).has_value());
  EXPECT_FALSE(max_term_size(empty()).has_value());
}

TEST_F(Grammars, UnproductiveCyclesDoNotMakeItInfinite) {
  Repository repo = parse_repository("comb y : a; comb f : b -> b; comb g : b -> a;");
  TreeGrammar g = inhabit(repo, T("a"));
  EXPECT_TRUE(is_finite(g));
  EXPECT_TRUE(is_unique(g));
  auto prod = productive(g);
  for (std::size_t i = 0; i < g.nonterminals.size(); ++i)
    if (g.nonterminals[i].goal == T("b")) {
      EXPECT_FALSE(prod[i]);
    }
}

TEST_F(Grammars, Uniqueness) {
  EXPECT_TRUE(is_unique(tracking()));
  EXPECT_FALSE(is_unique(windowing()));
  EXPECT_FALSE(is_unique(tracking("tracking_origin.clr")));
  EXPECT_FALSE(is_unique(cyclic()));
  EXPECT_FALSE(is_unique(empty()));

  TreeGrammar g = inhabit(parse_repository("comb f : a -> b; comb g : a;"), T("b"));
  EXPECT_TRUE(is_unique(g));
  EXPECT_EQ(strings(enumerate(g, 5)), std::vector<std::string>{"f(g)"});
}

TEST_F(Grammars, Counting) {
  EXPECT_EQ(count_up_to(windowing(), 10), 2u);
  EXPECT_EQ(count_up_to(windowing(), 5), 0u);
  EXPECT_EQ(count_up_to(cyclic(), 3), 3u);
  EXPECT_EQ(count_up_to(empty(), 100), 0u);
  for (std::size_t k = 1; k <= 12; ++k) EXPECT_EQ(count_up_to(cyclic(), k), k);
}

TEST_F(Grammars, Enumeration) {
  EXPECT_EQ(strings(enumerate(windowing(), 20)), (std::vector<std::string>{kE1, kE2}));
  EXPECT_EQ(strings(enumerate(tracking(), 20)), std::vector<std::string>{"fst(cc2pl(cdn(pos(Tr(u)))))"});
  EXPECT_EQ(strings(enumerate(cyclic(), 2)), (std::vector<std::string>{"y", "x(y)"}));
  EXPECT_TRUE(enumerate(empty(), 10).empty());
}

TEST_F(Grammars, EnumeratorIsLazyAndOrdered) {
  TermEnumerator it(cyclic());
  std::vector<ApplicativeTerm> got;
  for (int i = 0; i < 50; ++i) {
    auto t = it.next();
    ASSERT_TRUE(t.has_value());
    got.push_back(*t);
  }
  EXPECT_EQ(got[49].size(), 50u);
  for (std::size_t i = 1; i < got.size(); ++i) EXPECT_TRUE(size_then_structure_less(got[i - 1], got[i]));

  TermEnumerator bounded(windowing(), 6);
  EXPECT_TRUE(bounded.next().has_value());
  EXPECT_TRUE(bounded.next().has_value());
  EXPECT_FALSE(bounded.next().has_value());
}

TEST_F(Grammars, VariadicProductions) {
  TreeGrammar g = inhabit(parse_repository("comb k : a; comb h : b -> a;"), Type::omega());
  // k, h, and every k(...)/h(...) over omega arguments.
  EXPECT_EQ(count_up_to(g, 1), 2u);
  EXPECT_EQ(count_up_to(g, 2), 2u + 4u);
  EXPECT_FALSE(is_finite(g));
  auto terms = enumerate(g, 3);
  EXPECT_EQ(terms.size(), count_up_to(g, 3));
}

std::vector<TreeGrammar> random_grammars(unsigned seed, int n) {
  std::mt19937 rng(seed);
  testing::RepoShape shape;
  shape.types.variables = {"alpha"};
  std::vector<TreeGrammar> out;
  for (int i = 0; i < n; ++i) out.push_back(inhabit(testing::random_repository(rng, shape), T("a")));
  return out;
}

TEST_F(Grammars, EmptinessMatchesDepthBoundedCount) {
  for (auto make : {&Grammars::windowing, &Grammars::cyclic, &Grammars::empty}) {
    TreeGrammar g = make();
    EXPECT_EQ(is_empty(g), count_up_to(g, g.nonterminals.size()) == 0);
  }
  TreeGrammar t = tracking();
  EXPECT_EQ(is_empty(t), count_up_to(t, t.nonterminals.size()) == 0);
}

TEST_F(Grammars, DepthBoundIsNotASizeBound) {
  // Two nonterminals, but the smallest term has three nodes.
  TreeGrammar g = inhabit(parse_repository("comb f : b -> b -> a; comb y : b;"), T("a"));
  EXPECT_EQ(g.nonterminals.size(), 2u);
  EXPECT_FALSE(is_empty(g));
  EXPECT_EQ(count_up_to(g, g.nonterminals.size()), 0u);
  EXPECT_EQ(count_up_to(g, 3), 1u);
}

TEST_F(Grammars, EmptinessMatchesEnumerationOnRandomGrammars) {
  for (const auto& g : random_grammars(59, 80)) {
    TermEnumerator it(g);
    auto first = it.next();
    EXPECT_EQ(is_empty(g), !first.has_value());
  }
}

TEST_F(Grammars, InfiniteMeansUnboundedEnumeration) {
  int infinite = 0;
  for (const auto& g : random_grammars(61, 60)) {
    if (is_empty(g)) continue;
    TermEnumerator it(g);
    std::size_t produced = 0;
    while (produced < 40 && it.next()) ++produced;
    if (is_finite(g)) {
      EXPECT_EQ(produced, count_up_to(g, *max_term_size(g)));
    } else {
      ++infinite;
      EXPECT_EQ(produced, 40u);
    }
  }
  EXPECT_GT(infinite, 0);
}

TEST_F(Grammars, EnumeratedTermsTypecheck) {
  std::mt19937 rng(67);
  testing::RepoShape shape;
  shape.types.variables = {"alpha"};
  int checked = 0;
  for (int i = 0; i < 40; ++i) {
    Repository repo = testing::random_repository(rng, shape);
    TypecheckOracle oracle(repo, T("c"));
    for (const auto& e : enumerate(inhabit(repo, T("c")), 6)) {
      EXPECT_TRUE(oracle.check(e, T("c"))) << render_repository(repo) << to_string(e);
      ++checked;
    }
  }
  EXPECT_GT(checked, 10);
}

TEST_F(Grammars, EnumerationIsStable) {
  Repository repo = load_repository(testing::data_file("tracking_origin.clr"));
  SearchConfig many;
  many.parallelism = 8;
  auto a = strings(enumerate(inhabit(repo, T("Radius")), 20));
  auto b = strings(enumerate(inhabit(repo, T("Radius"), many), 20));
  EXPECT_EQ(a, b);
  EXPECT_EQ(strings(enumerate(cyclic(), 8)), strings(enumerate(cyclic(), 8)));
}

TEST(TypecheckTerm, Examples) {
  Repository w = load_repository(testing::data_file("windowing.clr"));
  EXPECT_TRUE(typecheck_term(w, parse_term(kE1), T("closed")));
  EXPECT_FALSE(typecheck_term(w, parse_term("closeWindow(init)"), T("closed")));

  Repository t = load_repository(testing::data_file("tracking_origin.clr"));
  EXPECT_TRUE(typecheck_term(t, parse_term("fst(cc2pl(origin))"), T("Radius")));
  EXPECT_FALSE(typecheck_term(t, parse_term("fst(origin)"), T("Radius")));

  Repository small = parse_repository("comb x : a -> b; comb y : c;");
  EXPECT_FALSE(typecheck_term(small, parse_term("x(y)"), T("b")));
  EXPECT_TRUE(typecheck_term(small, parse_term("x(y)"), Type::omega()));
  EXPECT_THROW(typecheck_term(small, parse_term("z"), T("b")), Error);
}

TEST(TypecheckTerm, Polymorphic) {
  Repository repo = load_repository(testing::data_file("composition.clr"));
  EXPECT_TRUE(typecheck_term(repo, parse_term("G(F1, F2)"), T("a -> c")));
  EXPECT_FALSE(typecheck_term(repo, parse_term("G(F2, F1)"), T("a -> c")));
  SearchConfig fcl;
  fcl.mode = Mode::Fcl;
  EXPECT_FALSE(typecheck_term(repo, parse_term("G(F1, F2)"), T("a -> c"), fcl));
}

}  // namespace
}  // namespace clsynth
