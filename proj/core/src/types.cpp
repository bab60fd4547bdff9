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

#include "clsynth/types.hpp"

#include <algorithm>
#include <charconv>
#include <functional>
#include <stdexcept>

namespace clsynth {

struct Type::Node {
  Kind kind;
  std::string name;
  std::vector<Type> children;
  std::size_t hash;
  std::size_t depth;
};

namespace {

std::size_t mix(std::size_t seed, std::size_t v) {
  return seed ^ (v + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2));
}

int kind_rank(Kind k) {
  switch (k) {
    case Kind::Constant: return 0;
    case Kind::Variable: return 1;
    case Kind::Omega: return 2;
    case Kind::Ctor: return 3;
    case Kind::Arrow: return 4;
    case Kind::Intersection: return 5;
  }
  return 6;
}

}  // namespace

std::string tuple_ctor_name(std::size_t arity) { return "Prod" + std::to_string(arity); }

bool is_tuple_ctor(std::string_view name, std::size_t arity) {
  if (arity < 2 || !name.starts_with("Prod")) return false;
  std::size_t n = 0;
  auto digits = name.substr(4);
  auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), n);
  return ec == std::errc() && ptr == digits.data() + digits.size() && n == arity;
}

Type::Type() : Type(omega()) {}

Type Type::omega() {
  static const auto node = std::make_shared<const Node>(
      Node{Kind::Omega, {}, {}, std::hash<std::string_view>{}("omega"), 0});
  return Type(node);
}

namespace {

std::shared_ptr<const Type::Node> make_node(Kind kind, std::string name, std::vector<Type> children) {
  std::size_t h = mix(std::hash<std::string>{}(name), static_cast<std::size_t>(kind));
  std::size_t depth = 0;
  for (const auto& c : children) {
    h = mix(h, c.hash());
    depth = std::max(depth, c.depth() + 1);
  }
  return std::make_shared<const Type::Node>(
      Type::Node{kind, std::move(name), std::move(children), h, depth});
}

}  // namespace

Type Type::constant(std::string name) { return Type(make_node(Kind::Constant, std::move(name), {})); }

Type Type::variable(std::string name) { return Type(make_node(Kind::Variable, std::move(name), {})); }

Type Type::ctor(std::string name, std::vector<Type> args) {
  if (name == kUsageContextCtor && args.size() == 1) {
    std::vector<Type> parts;
    for (auto& c : components(args[0])) {
      parts.push_back(Type(make_node(Kind::Ctor, name, {std::move(c)})));
    }
    return intersection(std::move(parts));
  }
  return Type(make_node(Kind::Ctor, std::move(name), std::move(args)));
}

Type Type::tuple(std::vector<Type> elements) {
  if (elements.size() < 2) throw std::invalid_argument("tuple needs at least two elements");
  auto name = tuple_ctor_name(elements.size());
  return ctor(std::move(name), std::move(elements));
}

Type Type::unit() { return constant(std::string(kUnitConstant)); }

Type Type::arrow(Type source, Type target) {
  return Type(make_node(Kind::Arrow, {}, {std::move(source), std::move(target)}));
}

Type Type::arrows(std::span<const Type> args, Type target) {
  Type result = std::move(target);
  for (auto it = args.rbegin(); it != args.rend(); ++it) result = arrow(*it, std::move(result));
  return result;
}

Type Type::intersection(std::vector<Type> parts) {
  std::vector<Type> flat;
  flat.reserve(parts.size());
  for (auto& p : parts) {
    switch (p.kind()) {
      case Kind::Omega: break;
      case Kind::Intersection:
        for (const auto& c : p.children()) flat.push_back(c);
        break;
      default: flat.push_back(std::move(p));
    }
  }
  std::sort(flat.begin(), flat.end());
  flat.erase(std::unique(flat.begin(), flat.end()), flat.end());
  if (flat.empty()) return omega();
  if (flat.size() == 1) return flat.front();
  return Type(make_node(Kind::Intersection, {}, std::move(flat)));
}

Kind Type::kind() const noexcept { return node_->kind; }
const std::string& Type::name() const noexcept { return node_->name; }
std::span<const Type> Type::children() const noexcept { return node_->children; }
std::size_t Type::hash() const noexcept { return node_->hash; }
std::size_t Type::depth() const noexcept { return node_->depth; }

const Type& Type::source() const {
  if (kind() != Kind::Arrow) throw std::logic_error("source() of a non-arrow type");
  return node_->children[0];
}

const Type& Type::target() const {
  if (kind() != Kind::Arrow) throw std::logic_error("target() of a non-arrow type");
  return node_->children[1];
}

bool operator==(const Type& a, const Type& b) noexcept {
  if (a.node_ == b.node_) return true;
  if (a.hash() != b.hash() || a.kind() != b.kind() || a.name() != b.name()) return false;
  auto ac = a.children();
  auto bc = b.children();
  return std::equal(ac.begin(), ac.end(), bc.begin(), bc.end());
}

std::strong_ordering operator<=>(const Type& a, const Type& b) noexcept {
  if (a.node_ == b.node_) return std::strong_ordering::equal;
  if (auto c = kind_rank(a.kind()) <=> kind_rank(b.kind()); c != 0) return c;
  if (auto c = a.name().compare(b.name()) <=> 0; c != 0) return c;
  auto ac = a.children();
  auto bc = b.children();
  return std::lexicographical_compare_three_way(ac.begin(), ac.end(), bc.begin(), bc.end());
}

Type canonicalize(const Type& t) {
  switch (t.kind()) {
    case Kind::Constant:
    case Kind::Variable:
    case Kind::Omega: return t;
    case Kind::Ctor: {
      std::vector<Type> args;
      for (const auto& c : t.children()) args.push_back(canonicalize(c));
      return Type::ctor(t.name(), std::move(args));
    }
    case Kind::Arrow: return Type::arrow(canonicalize(t.source()), canonicalize(t.target()));
    case Kind::Intersection: {
      std::vector<Type> parts;
      for (const auto& c : t.children()) parts.push_back(canonicalize(c));
      return Type::intersection(std::move(parts));
    }
  }
  return t;
}

std::vector<Type> components(const Type& t) {
  if (t.is_omega()) return {};
  if (t.kind() == Kind::Intersection) return {t.children().begin(), t.children().end()};
  return {t};
}

void collect_constants(const Type& t, std::set<std::string>& out) {
  if (t.kind() == Kind::Constant) out.insert(t.name());
  for (const auto& c : t.children()) collect_constants(c, out);
}

void collect_variables(const Type& t, std::set<std::string>& out) {
  if (t.kind() == Kind::Variable) out.insert(t.name());
  for (const auto& c : t.children()) collect_variables(c, out);
}

bool is_ground(const Type& t) {
  if (t.kind() == Kind::Variable) return false;
  for (const auto& c : t.children()) {
    if (!is_ground(c)) return false;
  }
  return true;
}

namespace {

void organize_into(const Type& t, std::vector<Type>& prefix, std::vector<Path>& out) {
  switch (t.kind()) {
    case Kind::Omega: return;
    case Kind::Constant:
    case Kind::Variable:
    case Kind::Ctor: out.push_back(Path{prefix, t}); return;
    case Kind::Intersection:
      for (const auto& c : t.children()) organize_into(c, prefix, out);
      return;
    case Kind::Arrow:
      prefix.push_back(t.source());
      organize_into(t.target(), prefix, out);
      prefix.pop_back();
      return;
  }
}

}  // namespace

OrganizedType organize(const Type& t) {
  OrganizedType o;
  std::vector<Type> prefix;
  organize_into(t, prefix, o.paths);
  std::sort(o.paths.begin(), o.paths.end());
  o.paths.erase(std::unique(o.paths.begin(), o.paths.end()), o.paths.end());
  return o;
}

Type render(const OrganizedType& o) {
  std::vector<Type> parts;
  parts.reserve(o.paths.size());
  for (const auto& p : o.paths) parts.push_back(p.to_type());
  return Type::intersection(std::move(parts));
}

std::vector<Path> paths_at_least(const OrganizedType& o, std::size_t n) {
  std::vector<Path> out;
  for (const auto& p : o.paths) {
    if (p.length() >= n) out.push_back(p);
  }
  return out;
}

PathSplit path_split(const Path& p, std::size_t n) {
  if (n > p.length()) {
    throw std::out_of_range("path_split: n = " + std::to_string(n) + " exceeds path length " +
                            std::to_string(p.length()));
  }
  PathSplit s;
  s.args.assign(p.args.begin(), p.args.begin() + static_cast<std::ptrdiff_t>(n));
  std::span<const Type> rest(p.args.data() + n, p.args.size() - n);
  s.target = Type::arrows(rest, p.leaf);
  return s;
}

std::size_t path_length(const Type& t) {
  std::size_t best = 0;
  for (const auto& p : organize(t).paths) best = std::max(best, p.length());
  return best;
}

}  // namespace clsynth
