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

#ifndef CLSYNTH_SUBTYPING_HPP
#define CLSYNTH_SUBTYPING_HPP

#include <map>
#include <mutex>
#include <set>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "clsynth/types.hpp"

namespace clsynth {

// Declared preorder on type constants (`subtype A <= B;`).
class Taxonomy {
 public:
  Taxonomy() = default;

  void add_edge(const std::string& sub, const std::string& super);

  // Reflexive-transitive closure over constants; omega is above everything,
  // variables relate only to themselves and omega.
  bool leq(const std::string& a, const std::string& b) const;

  const std::set<std::pair<std::string, std::string>>& edges() const noexcept { return edges_; }
  // All constants strictly or reflexively below c.
  std::set<std::string> below(const std::string& c) const;

  friend bool operator==(const Taxonomy& a, const Taxonomy& b) { return a.edges_ == b.edges_; }

 private:
  std::set<std::pair<std::string, std::string>> edges_;
  std::map<std::string, std::set<std::string>> up_;  // c -> every d with c <= d, d != c
};

bool atom_leq(const Taxonomy& tax, const Type& a, const Type& b);

// Decides the subtype relation over a fixed taxonomy. Verdicts are memoized;
// the cache is internally synchronized, so one checker may be shared between
// threads.
class SubtypeChecker {
 public:
  explicit SubtypeChecker(const Taxonomy& tax) : tax_(&tax) {}

  SubtypeChecker(const SubtypeChecker&) = delete;
  SubtypeChecker& operator=(const SubtypeChecker&) = delete;

  bool is_subtype(const Type& s, const Type& t) const;
  bool equiv(const Type& s, const Type& t) const { return is_subtype(s, t) && is_subtype(t, s); }

  // s <= a single path p.
  bool covers(const OrganizedType& s, const Path& p) const;

  const Taxonomy& taxonomy() const noexcept { return *tax_; }

 private:
  struct PairHash {
    std::size_t operator()(const std::pair<Type, Type>& p) const noexcept {
      return p.first.hash() * 31 + p.second.hash();
    }
  };

  bool decide(const Type& s, const Type& t) const;

  const Taxonomy* tax_;
  mutable std::mutex mutex_;
  mutable std::unordered_map<std::pair<Type, Type>, bool, PairHash> cache_;
};

bool is_subtype(const Taxonomy& tax, const Type& s, const Type& t);
bool equiv(const Taxonomy& tax, const Type& s, const Type& t);

}  // namespace clsynth

#endif  // CLSYNTH_SUBTYPING_HPP
