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

#include "subtype_saturation.hpp"

#include <algorithm>
#include <set>

namespace clsynth::oracle {

SaturatedSubtyping::SaturatedSubtyping(std::vector<Type> universe,
                                       std::vector<std::pair<std::string, std::string>> edges)
    : universe_(std::move(universe)), edges_(std::move(edges)) {
  for (std::size_t i = 0; i < universe_.size(); ++i) index_.emplace(universe_[i], i);
  const std::size_t n = universe_.size();
  words_ = (n + 63) / 64;
  rel_.assign(n * words_, 0);

  bool changed = true;
  while (changed) {
    changed = false;
    ++rounds_;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (!bit(i, j) && local_rules(i, j)) changed |= set(i, j);
    changed |= close_transitively();
  }
}

bool SaturatedSubtyping::set(std::size_t i, std::size_t j) {
  auto& w = rel_[i * words_ + j / 64];
  const std::uint64_t mask = std::uint64_t{1} << (j % 64);
  if (w & mask) return false;
  w |= mask;
  return true;
}

long SaturatedSubtyping::index_of(const Type& t) const {
  auto it = index_.find(t);
  return it == index_.end() ? -1 : static_cast<long>(it->second);
}

bool SaturatedSubtyping::local_rules(std::size_t i, std::size_t j) const {
  const Type& s = universe_[i];
  const Type& t = universe_[j];
  if (i == j || t.is_omega()) return true;

  if (s.kind() == Kind::Constant && t.kind() == Kind::Constant) {
    for (const auto& [a, b] : edges_)
      if (a == s.name() && b == t.name()) return true;
  }
  if (s.is_omega() && t == Type::arrow(Type::omega(), Type::omega())) return true;

  // s & s' <= s
  if (s.kind() == Kind::Intersection) {
    for (const auto& c : s.children())
      if (c == t) return true;
  }
  // s <= t1 and s <= t2 gives s <= t1 & t2
  if (t.kind() == Kind::Intersection) {
    bool all = true;
    for (const auto& c : t.children()) {
      long k = index_of(c);
      if (k < 0 || !bit(i, static_cast<std::size_t>(k))) {
        all = false;
        break;
      }
    }
    if (all) return true;
  }
  if (t.kind() == Kind::Arrow) {
    const Type& src = t.source();
    const Type& tgt = t.target();
    if (s.kind() == Kind::Arrow) {
      long a = index_of(src), b = index_of(s.source());
      long c = index_of(s.target()), d = index_of(tgt);
      if (a >= 0 && b >= 0 && c >= 0 && d >= 0 && bit(a, b) && bit(c, d)) return true;
    }
    // s <= x -> t1 and s <= x -> t2 gives s <= x -> t1 & t2
    if (tgt.kind() == Kind::Intersection) {
      auto comps = tgt.children();
      const std::size_t k = comps.size();
      for (std::uint32_t mask = 1; mask + 1 < (1u << k); ++mask) {
        std::vector<Type> left, right;
        for (std::size_t q = 0; q < k; ++q) (mask >> q & 1u ? left : right).push_back(comps[q]);
        long l = index_of(Type::arrow(src, Type::intersection(left)));
        long r = index_of(Type::arrow(src, Type::intersection(right)));
        if (l >= 0 && r >= 0 && bit(i, l) && bit(i, r)) return true;
      }
    }
  }
  return false;
}

bool SaturatedSubtyping::close_transitively() {
  const std::size_t n = universe_.size();
  bool changed = false;
  for (std::size_t k = 0; k < n; ++k) {
    const std::uint64_t* row_k = &rel_[k * words_];
    for (std::size_t i = 0; i < n; ++i) {
      if (!bit(i, k)) continue;
      std::uint64_t* row_i = &rel_[i * words_];
      for (std::size_t w = 0; w < words_; ++w) {
        std::uint64_t next = row_i[w] | row_k[w];
        if (next != row_i[w]) {
          row_i[w] = next;
          changed = true;
        }
      }
    }
  }
  return changed;
}

std::vector<Type> depth_universe(const std::vector<std::string>& constants, std::size_t depth) {
  std::set<Type> level;
  level.insert(Type::omega());
  for (const auto& c : constants) level.insert(Type::constant(c));
  for (std::size_t d = 0; d < depth; ++d) {
    std::vector<Type> prev(level.begin(), level.end());
    for (const auto& a : prev)
      for (const auto& b : prev) {
        level.insert(Type::arrow(a, b));
        level.insert(Type::intersection({a, b}));
      }
  }
  return {level.begin(), level.end()};
}

}  // namespace clsynth::oracle
