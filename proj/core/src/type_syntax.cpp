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

#include "clsynth/type_syntax.hpp"

#include <ostream>

#include "type_parser.hpp"

namespace clsynth {

namespace detail {

namespace {

Type parse_primary(Lexer& lex) {
  const Token& tok = lex.peek();
  switch (tok.kind) {
    case Tok::Variable: return Type::variable(lex.next().text);
    case Tok::Ident: {
      Token name = lex.next();
      if (!name.quoted && name.text == "omega") return Type::omega();
      if (!lex.accept(Tok::LParen)) return Type::constant(std::move(name.text));
      if (lex.peek().kind == Tok::RParen) lex.fail("constructor '" + name.text + "' needs arguments");
      std::vector<Type> args;
      do {
        args.push_back(parse_type(lex));
      } while (lex.accept(Tok::Comma));
      lex.expect(Tok::RParen, "')' closing constructor arguments");
      return Type::ctor(std::move(name.text), std::move(args));
    }
    case Tok::LParen: {
      lex.next();
      if (lex.accept(Tok::RParen)) return Type::unit();
      std::vector<Type> elements;
      do {
        elements.push_back(parse_type(lex));
      } while (lex.accept(Tok::Comma));
      lex.expect(Tok::RParen, "')'");
      if (elements.size() == 1) return elements.front();
      return Type::tuple(std::move(elements));
    }
    default: lex.fail("expected a type" + lex.describe());
  }
}

Type parse_intersection(Lexer& lex) {
  std::vector<Type> parts{parse_primary(lex)};
  while (lex.accept(Tok::Amp)) parts.push_back(parse_primary(lex));
  return Type::intersection(std::move(parts));
}

}  // namespace

Type parse_type(Lexer& lex) {
  Type lhs = parse_intersection(lex);
  if (lex.accept(Tok::Arrow)) return Type::arrow(std::move(lhs), parse_type(lex));
  return lhs;
}

}  // namespace detail

Type parse_type(std::string_view text) {
  detail::Lexer lex(text);
  Type t = detail::parse_type(lex);
  if (lex.peek().kind != detail::Tok::End) lex.fail("trailing input after type" + lex.describe());
  return t;
}

std::string quote_name(std::string_view name) {
  bool plain = !name.empty() && name != "omega";
  for (std::size_t i = 0; plain && i < name.size(); ++i) {
    char c = name[i];
    bool alpha = (c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z') || c == '_';
    bool digit = (c >= '0' && c <= '9') || c == '.';
    plain = alpha || (i > 0 && digit);
  }
  if (plain) return std::string(name);
  return "`" + std::string(name) + "`";
}

namespace {

enum class Ctx { Top, Operand };

void print(std::string& out, const Type& t, Ctx ctx) {
  switch (t.kind()) {
    case Kind::Constant:
      out += t.name() == kUnitConstant ? std::string("()") : quote_name(t.name());
      return;
    case Kind::Variable:
      out += '\'';
      out += t.name();
      return;
    case Kind::Omega: out += "omega"; return;
    case Kind::Ctor: {
      auto args = t.children();
      bool tuple = is_tuple_ctor(t.name(), args.size());
      if (!tuple) out += quote_name(t.name());
      out += '(';
      for (std::size_t i = 0; i < args.size(); ++i) {
        if (i) out += ", ";
        print(out, args[i], Ctx::Top);
      }
      out += ')';
      return;
    }
    case Kind::Arrow: {
      if (ctx == Ctx::Operand) out += '(';
      print(out, t.source(), Ctx::Operand);
      out += " -> ";
      print(out, t.target(), Ctx::Top);
      if (ctx == Ctx::Operand) out += ')';
      return;
    }
    case Kind::Intersection: {
      // '&' binds tighter than '->', so an intersection is a valid arrow
      // source without parentheses.
      auto parts = t.children();
      for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i) out += " & ";
        print(out, parts[i], Ctx::Operand);
      }
      return;
    }
  }
}

}  // namespace

std::string to_string(const Type& t) {
  std::string out;
  print(out, t, Ctx::Top);
  return out;
}

std::string to_string(const Path& p) { return to_string(p.to_type()); }

std::string to_string(const OrganizedType& o) {
  if (o.paths.empty()) return "omega";
  std::string out;
  for (std::size_t i = 0; i < o.paths.size(); ++i) {
    if (i) out += '\n';
    out += to_string(o.paths[i]);
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const Type& t) { return os << to_string(t); }

}  // namespace clsynth
