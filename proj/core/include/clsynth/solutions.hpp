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

#ifndef CLSYNTH_SOLUTIONS_HPP
#define CLSYNTH_SOLUTIONS_HPP

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <vector>

#include "clsynth/inhabitation.hpp"
#include "clsynth/repository.hpp"
#include "clsynth/subtyping.hpp"
#include "clsynth/term.hpp"

namespace clsynth {

// Productive nonterminals: least fixed point over the productions.
std::vector<bool> productive(const TreeGrammar& g);

bool is_empty(const TreeGrammar& g);
bool is_finite(const TreeGrammar& g);
bool is_unique(const TreeGrammar& g);

// Largest term size of a finite grammar; nullopt if empty or infinite.
std::optional<std::size_t> max_term_size(const TreeGrammar& g);

std::uint64_t count_up_to(const TreeGrammar& g, std::size_t size_bound);

std::vector<ApplicativeTerm> enumerate(const TreeGrammar& g, std::size_t size_bound);

// Produces the distinct terms of a grammar in (size, structure) order, one
// size class at a time.
class TermEnumerator {
 public:
  explicit TermEnumerator(const TreeGrammar& g, std::optional<std::size_t> size_bound = std::nullopt);
  ~TermEnumerator();
  TermEnumerator(TermEnumerator&&) noexcept;
  TermEnumerator& operator=(TermEnumerator&&) noexcept;

  std::optional<ApplicativeTerm> next();

 private:
  struct Table;
  std::unique_ptr<Table> table_;
  std::optional<std::size_t> bound_;
  std::size_t size_ = 0;
  std::size_t pos_ = 0;
};

// Brute-force type checker used as an oracle against the search engine.
// Computes the derivable paths of a term bottom-up from fully instantiated
// combinator types.
class TypecheckOracle {
 public:
  TypecheckOracle(const Repository& repo, const Type& goal, const SearchConfig& cfg = {});

  // Intersection of every type derivable for e; throws Error on an unknown
  // combinator.
  Type derive(const ApplicativeTerm& e);
  bool check(const ApplicativeTerm& e, const Type& goal);

 private:
  const std::vector<InstantiatedPath>& paths_of(const std::string& combinator);

  const Repository& repo_;
  SearchConfig cfg_;
  std::set<std::string> atoms_;
  SubtypeChecker checker_;
  std::map<std::string, std::vector<InstantiatedPath>> paths_;
  std::map<ApplicativeTerm, Type> derived_;
};

bool typecheck_term(const Repository& repo, const ApplicativeTerm& e, const Type& goal,
                    const SearchConfig& cfg = {});

}  // namespace clsynth

#endif  // CLSYNTH_SOLUTIONS_HPP
