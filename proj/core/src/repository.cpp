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

#include "clsynth/repository.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "clsynth/errors.hpp"
#include "clsynth/type_syntax.hpp"
#include "lexer.hpp"
#include "type_parser.hpp"

namespace clsynth {

std::string to_string(Mode m) { return m == Mode::Fcl ? "fcl" : "bcl0"; }

Mode parse_mode(std::string_view text) {
  if (text == "fcl") return Mode::Fcl;
  if (text == "bcl0") return Mode::Bcl0;
  throw Error("unknown mode '" + std::string(text) + "' (expected fcl or bcl0)");
}

void Repository::record_arities(const Type& t, std::map<std::string, std::size_t>& into) const {
  if (t.kind() == Kind::Ctor) {
    auto [it, inserted] = into.emplace(t.name(), t.children().size());
    if (!inserted && it->second != t.children().size()) {
      throw ValidationError("constructor '" + t.name() + "' used with arity " +
                            std::to_string(t.children().size()) + " but previously with arity " +
                            std::to_string(it->second));
    }
  }
  for (const auto& c : t.children()) record_arities(c, into);
}

void Repository::check_arities(const Type& t) const {
  auto copy = ctor_arities_;
  record_arities(t, copy);
}

void Repository::add_binding(std::string name, Type type) {
  if (index_.count(name)) throw ValidationError("duplicate combinator '" + name + "'");
  auto arities = ctor_arities_;
  record_arities(type, arities);
  ctor_arities_ = std::move(arities);
  index_.emplace(name, bindings_.size());
  bindings_.push_back(CombinatorBinding{std::move(name), std::move(type)});
}

void Repository::add_subtype(const std::string& sub, const std::string& super) {
  taxonomy_.add_edge(sub, super);
}

const CombinatorBinding* Repository::find(std::string_view name) const {
  auto it = index_.find(std::string(name));
  return it == index_.end() ? nullptr : &bindings_[it->second];
}

Repository parse_repository(std::string_view source) {
  using detail::Tok;
  detail::Lexer lex(source);
  Repository repo;
  while (lex.peek().kind != Tok::End) {
    const auto start = lex.peek();
    if (lex.at_keyword("comb")) {
      lex.next();
      auto name = lex.expect(Tok::Ident, "combinator name").text;
      lex.expect(Tok::Colon, "':'");
      Type type = detail::parse_type(lex);
      lex.expect(Tok::Semi, "';' after combinator type");
      try {
        repo.add_binding(std::move(name), std::move(type));
      } catch (const ValidationError& e) {
        throw ParseError(e.what(), start.line, start.column);
      }
    } else if (lex.at_keyword("subtype")) {
      lex.next();
      auto sub = lex.expect(Tok::Ident, "constant name").text;
      lex.expect(Tok::Leq, "'<='");
      auto super = lex.expect(Tok::Ident, "constant name").text;
      lex.expect(Tok::Semi, "';' after subtype statement");
      repo.add_subtype(sub, super);
    } else {
      lex.fail("expected 'comb' or 'subtype'" + lex.describe());
    }
  }
  return repo;
}

Repository load_repository(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open repository file '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  try {
    return parse_repository(buf.str());
  } catch (const ParseError& e) {
    throw Error(path + ":" + e.what());
  }
}

std::string render_repository(const Repository& repo) {
  std::string out;
  for (const auto& [sub, super] : repo.taxonomy().edges()) {
    out += "subtype " + quote_name(sub) + " <= " + quote_name(super) + ";\n";
  }
  for (const auto& b : repo.bindings()) {
    out += "comb " + quote_name(b.name) + " : " + to_string(b.type) + ";\n";
  }
  return out;
}

std::set<std::string> atoms_of(const Repository& repo, const Type& goal) {
  std::set<std::string> out;
  for (const auto& b : repo.bindings()) collect_constants(b.type, out);
  collect_constants(goal, out);
  return out;
}

Type Level0Image::to_type() const {
  std::vector<Type> parts;
  for (const auto& a : atoms) parts.push_back(Type::constant(a));
  return Type::intersection(std::move(parts));
}

Level0Images::Level0Images(const std::set<std::string>& atoms, std::uint64_t cap)
    : atoms_(atoms.begin(), atoms.end()) {
  if (atoms_.size() >= 63 || (std::uint64_t{1} << atoms_.size()) > cap) {
    throw SubstitutionSpaceExceeded(cap);
  }
}

Level0Image Level0Images::operator[](std::uint64_t mask) const {
  Level0Image img;
  for (std::size_t i = 0; i < atoms_.size(); ++i) {
    if (mask & (std::uint64_t{1} << i)) img.atoms.push_back(atoms_[i]);
  }
  std::sort(img.atoms.begin(), img.atoms.end());
  return img;
}

Level0Images level0_images(const std::set<std::string>& atoms, std::uint64_t cap) {
  return Level0Images(atoms, cap);
}

std::string to_string(const Substitution& s) {
  std::string out = "{";
  bool first = true;
  for (const auto& [var, img] : s) {
    if (!first) out += ", ";
    first = false;
    out += "'" + var + " -> " + to_string(img.to_type());
  }
  return out + "}";
}

Type apply_substitution(const Substitution& s, const Type& t) {
  switch (t.kind()) {
    case Kind::Variable: {
      auto it = s.find(t.name());
      return it == s.end() ? t : it->second.to_type();
    }
    case Kind::Constant:
    case Kind::Omega: return t;
    case Kind::Ctor: {
      std::vector<Type> args;
      for (const auto& c : t.children()) args.push_back(apply_substitution(s, c));
      return Type::ctor(t.name(), std::move(args));
    }
    case Kind::Arrow:
      return Type::arrow(apply_substitution(s, t.source()), apply_substitution(s, t.target()));
    case Kind::Intersection: {
      std::vector<Type> parts;
      for (const auto& c : t.children()) parts.push_back(apply_substitution(s, c));
      return Type::intersection(std::move(parts));
    }
  }
  return t;
}

std::vector<InstantiatedPath> instantiate(const CombinatorBinding& binding,
                                          const std::set<std::string>& atoms, Mode mode,
                                          std::uint64_t cap) {
  std::set<std::string> vars;
  collect_variables(binding.type, vars);
  std::vector<InstantiatedPath> out;
  if (mode == Mode::Fcl || vars.empty()) {
    for (auto& p : organize(binding.type).paths) out.push_back({std::move(p), {}});
    return out;
  }
  const Level0Images images(atoms, cap);
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < vars.size(); ++i) {
    if (total > cap / images.size()) throw SubstitutionSpaceExceeded(cap);
    total *= images.size();
  }
  const std::vector<std::string> var_list(vars.begin(), vars.end());
  std::map<Path, Substitution> seen;
  std::vector<std::uint64_t> digits(var_list.size(), 0);
  for (std::uint64_t k = 0; k < total; ++k) {
    Substitution s;
    for (std::size_t i = 0; i < var_list.size(); ++i) s.emplace(var_list[i], images[digits[i]]);
    for (auto& p : organize(apply_substitution(s, binding.type)).paths) seen.emplace(std::move(p), s);
    for (std::size_t i = 0; i < digits.size(); ++i) {
      if (++digits[i] < images.size()) break;
      digits[i] = 0;
    }
  }
  for (auto& [p, s] : seen) out.push_back({p, std::move(s)});
  return out;
}

}  // namespace clsynth
