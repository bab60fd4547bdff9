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

// Intersection types over constants, level-0 variables, omega, covariant
// constructors and arrows.
//
// Every Type value is canonical: the factories flatten, deduplicate and sort
// intersections, absorb omega, and distribute the usage-context constructor
// `uc` over intersections. Nodes are immutable and shared, so a Type is cheap
// to copy and safe to hand to other threads.

#ifndef CLSYNTH_TYPES_HPP
#define CLSYNTH_TYPES_HPP

#include <compare>
#include <cstddef>
#include <memory>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace clsynth {

enum class Kind : unsigned char { Constant, Variable, Omega, Ctor, Arrow, Intersection };

// Name of the unary constructor that distributes over intersections:
// uc(a & b) = uc(a) & uc(b), uc(omega) = omega.
inline constexpr std::string_view kUsageContextCtor = "uc";
// `()` in the surface syntax.
inline constexpr std::string_view kUnitConstant = "Unit";
// (t1, ..., tn) is sugar for Prod<n>(t1, ..., tn).
std::string tuple_ctor_name(std::size_t arity);
bool is_tuple_ctor(std::string_view name, std::size_t arity);

class Type {
 public:
  // Omega.
  Type();

  static Type constant(std::string name);
  static Type variable(std::string name);
  static Type omega();
  static Type ctor(std::string name, std::vector<Type> args);
  static Type tuple(std::vector<Type> elements);
  static Type unit();
  static Type arrow(Type source, Type target);
  // Right-nested arrow args[0] -> ... -> args[n-1] -> target.
  static Type arrows(std::span<const Type> args, Type target);
  static Type intersection(std::vector<Type> components);

  Kind kind() const noexcept;
  bool is_omega() const noexcept { return kind() == Kind::Omega; }
  bool is_atom() const noexcept { return kind() == Kind::Constant || kind() == Kind::Variable; }

  // Constant, variable or constructor name; empty otherwise.
  const std::string& name() const noexcept;
  // Constructor arguments, intersection components, or {source, target}.
  std::span<const Type> children() const noexcept;
  const Type& source() const;
  const Type& target() const;

  std::size_t hash() const noexcept;
  std::size_t depth() const noexcept;

  friend bool operator==(const Type& a, const Type& b) noexcept;
  friend std::strong_ordering operator<=>(const Type& a, const Type& b) noexcept;

  struct Node;

 private:
  explicit Type(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

struct TypeHash {
  std::size_t operator()(const Type& t) const noexcept { return t.hash(); }
};

// Rebuilds t through the canonicalizing factories. Values obtained from this
// library are already canonical, so this is the identity on them.
Type canonicalize(const Type& t);

// Intersection components of t, or {t} for a non-intersection; {} for omega.
std::vector<Type> components(const Type& t);

void collect_constants(const Type& t, std::set<std::string>& out);
void collect_variables(const Type& t, std::set<std::string>& out);
bool is_ground(const Type& t);

// A path tau_1 -> ... -> tau_n -> leaf, where the leaf is a constant,
// variable or constructor application (never omega, an arrow or an
// intersection).
struct Path {
  std::vector<Type> args;
  Type leaf;

  std::size_t length() const noexcept { return args.size(); }
  Type to_type() const { return Type::arrows(args, leaf); }

  friend bool operator==(const Path&, const Path&) = default;
  friend auto operator<=>(const Path&, const Path&) = default;
};

// An intersection of paths; the empty set is omega.
struct OrganizedType {
  std::vector<Path> paths;  // sorted, unique

  bool is_omega() const noexcept { return paths.empty(); }
  friend bool operator==(const OrganizedType&, const OrganizedType&) = default;
};

OrganizedType organize(const Type& t);
Type render(const OrganizedType& o);

std::vector<Path> paths_at_least(const OrganizedType& o, std::size_t n);

struct PathSplit {
  std::vector<Type> args;
  Type target;
};
// First n arguments and the remaining target; throws std::out_of_range when n
// exceeds the path length.
PathSplit path_split(const Path& p, std::size_t n);

// Maximal path length of organize(t); 0 for omega.
std::size_t path_length(const Type& t);

}  // namespace clsynth

#endif  // CLSYNTH_TYPES_HPP
