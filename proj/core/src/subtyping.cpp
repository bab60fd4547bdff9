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

#include "clsynth/subtyping.hpp"

#include <deque>

namespace clsynth {

void Taxonomy::add_edge(const std::string& sub, const std::string& super) {
  if (!edges_.emplace(sub, super).second) return;
  // Closure is rebuilt eagerly; taxonomies are small.
  std::set<std::string> nodes;
  for (const auto& [a, b] : edges_) {
    nodes.insert(a);
    nodes.insert(b);
  }
  std::map<std::string, std::vector<std::string>> succ;
  for (const auto& [a, b] : edges_) succ[a].push_back(b);
  up_.clear();
  for (const auto& n : nodes) {
    std::set<std::string> seen;
    std::deque<std::string> work{n};
    while (!work.empty()) {
      auto cur = work.front();
      work.pop_front();
      for (const auto& nxt : succ[cur]) {
        if (nxt != n && seen.insert(nxt).second) work.push_back(nxt);
      }
    }
    if (!seen.empty()) up_[n] = std::move(seen);
  }
}

bool Taxonomy::leq(const std::string& a, const std::string& b) const {
  if (a == b) return true;
  auto it = up_.find(a);
  return it != up_.end() && it->second.count(b) > 0;
}

std::set<std::string> Taxonomy::below(const std::string& c) const {
  std::set<std::string> out{c};
  for (const auto& [a, ups] : up_) {
    if (ups.count(c)) out.insert(a);
  }
  return out;
}

bool atom_leq(const Taxonomy& tax, const Type& a, const Type& b) {
  if (b.is_omega()) return true;
  if (a == b) return true;
  if (a.kind() == Kind::Constant && b.kind() == Kind::Constant) return tax.leq(a.name(), b.name());
  return false;
}

bool SubtypeChecker::is_subtype(const Type& s, const Type& t) const {
  if (t.is_omega() || s == t) return true;
  auto key = std::make_pair(s, t);
  {
    std::lock_guard lock(mutex_);
    if (auto it = cache_.find(key); it != cache_.end()) return it->second;
  }
  bool verdict = decide(s, t);
  std::lock_guard lock(mutex_);
  cache_.emplace(std::move(key), verdict);
  return verdict;
}

bool SubtypeChecker::covers(const OrganizedType& s, const Path& goal) const {
  const std::size_t n = goal.length();
  // Paths of s whose first n arguments accept the goal's arguments; only
  // those of length exactly n contribute a leaf.
  std::vector<const Path*> contributing;
  for (const auto& p : s.paths) {
    if (p.length() != n) continue;
    bool args_ok = true;
    for (std::size_t i = 0; i < n && args_ok; ++i) args_ok = is_subtype(goal.args[i], p.args[i]);
    if (args_ok) contributing.push_back(&p);
  }
  const Type& leaf = goal.leaf;
  if (leaf.kind() != Kind::Ctor) {
    for (const auto* p : contributing) {
      if (p->leaf.is_atom() && atom_leq(*tax_, p->leaf, leaf)) return true;
    }
    return false;
  }
  // Constructor leaves: covariant and distributive, so the matching leaves
  // are intersected argument-wise.
  const auto goal_args = leaf.children();
  std::vector<std::vector<Type>> gathered(goal_args.size());
  bool any = false;
  for (const auto* p : contributing) {
    if (p->leaf.kind() != Kind::Ctor || p->leaf.name() != leaf.name() ||
        p->leaf.children().size() != goal_args.size()) {
      continue;
    }
    any = true;
    auto args = p->leaf.children();
    for (std::size_t i = 0; i < args.size(); ++i) gathered[i].push_back(args[i]);
  }
  if (!any) return false;
  for (std::size_t i = 0; i < goal_args.size(); ++i) {
    if (!is_subtype(Type::intersection(std::move(gathered[i])), goal_args[i])) return false;
  }
  return true;
}

bool SubtypeChecker::decide(const Type& s, const Type& t) const {
  const auto target = organize(t);
  if (target.is_omega()) return true;
  const auto source = organize(s);
  for (const auto& p : target.paths) {
    if (!covers(source, p)) return false;
  }
  return true;
}

bool is_subtype(const Taxonomy& tax, const Type& s, const Type& t) {
  return SubtypeChecker(tax).is_subtype(s, t);
}

bool equiv(const Taxonomy& tax, const Type& s, const Type& t) { return SubtypeChecker(tax).equiv(s, t); }

}  // namespace clsynth
