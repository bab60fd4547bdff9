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

#include "clsynth/errors.hpp"
#include "clsynth/type_syntax.hpp"
#include "support.hpp"

namespace clsynth {
namespace {

TEST(TypeSyntax, ArrowIsRightAssociative) {
  Type t = parse_type("a -> b -> c");
  ASSERT_EQ(t.kind(), Kind::Arrow);
  EXPECT_EQ(t.source(), Type::constant("a"));
  EXPECT_EQ(t.target(), parse_type("b -> c"));
}

TEST(TypeSyntax, IntersectionBindsTighterThanArrow) {
  EXPECT_EQ(parse_type("a & b -> c"), Type::arrow(parse_type("a & b"), Type::constant("c")));
}

TEST(TypeSyntax, PrintsCanonicalForm) {
  EXPECT_EQ(to_string(parse_type("b & a")), "a & b");
  EXPECT_EQ(to_string(parse_type("(a -> b) -> c")), "(a -> b) -> c");
  EXPECT_EQ(to_string(parse_type("()")), "()");
  EXPECT_EQ(to_string(parse_type("'x")), "'x");
  EXPECT_EQ(to_string(Type::omega()), "omega");
  EXPECT_EQ(to_string(parse_type("D((R, R) & Cart, R)")), "D(Cart & (R, R), R)");
}

TEST(TypeSyntax, QuotesUnusualNames) {
  EXPECT_EQ(quote_name("ViewIngr&Prep"), "`ViewIngr&Prep`");
  EXPECT_EQ(quote_name("LargeClock.guif"), "LargeClock.guif");
  Type t = parse_type("`ViewIngr&Prep` & x");
  EXPECT_EQ(parse_type(to_string(t)), t);
}

TEST(TypeSyntax, RoundTripsRandomTypes) {
  std::mt19937 rng(3);
  testing::TypeShape shape;
  shape.variables = {"x"};
  shape.unary_ctors = {"uc", "D"};
  shape.max_depth = 4;
  for (int i = 0; i < 1000; ++i) {
    Type t = testing::random_type(rng, shape);
    EXPECT_EQ(parse_type(to_string(t)), t) << to_string(t);
  }
}

TEST(TypeSyntax, PathAndOrganizedRendering) {
  auto o = organize(parse_type("a -> b & c"));
  EXPECT_EQ(to_string(o), "a -> b\na -> c");
  EXPECT_EQ(to_string(o.paths[0]), "a -> b");
  EXPECT_EQ(to_string(OrganizedType{}), "omega");
}

TEST(TypeSyntax, RejectsMalformedInput) {
  EXPECT_THROW(parse_type(""), ParseError);
  EXPECT_THROW(parse_type("a ->"), ParseError);
  EXPECT_THROW(parse_type("(a, b"), ParseError);
  EXPECT_THROW(parse_type("a b"), ParseError);
  EXPECT_THROW(parse_type("'"), ParseError);
  try {
    parse_type("a & & b");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 1u);
    EXPECT_GT(e.column(), 1u);
  }
}

}  // namespace
}  // namespace clsynth
