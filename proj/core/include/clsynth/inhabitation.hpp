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

// Goal-directed, memoized inhabitation search. The result is a tree grammar
// whose nonterminals are goals and whose productions are combinator
// applications; cycles in the grammar stand for infinite inhabitant sets.

#ifndef CLSYNTH_INHABITATION_HPP
#define CLSYNTH_INHABITATION_HPP

#include <chrono>
#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "clsynth/repository.hpp"
#include "clsynth/term.hpp"
#include "clsynth/types.hpp"

namespace clsynth {

struct SearchConfig {
  Mode mode = Mode::Bcl0;
  // Upper bound on 2^|atoms| and on the substitutions tried for one path.
  std::uint64_t subst_cap = std::uint64_t{1} << 20;
  std::size_t max_nonterminals = 100000;
  // Zero disables the deadline.
  std::chrono::milliseconds timeout{60000};
  unsigned parallelism = 1;
};

struct Production {
  std::string combinator;
  // Nonterminal indices, one per argument. For a variadic production the
  // combinator takes any number (zero included) of arguments, each drawn
  // from args[0]; this only arises for goals equivalent to omega.
  std::vector<std::size_t> args;
  bool variadic = false;
  // The instantiated paths that justify the production.
  std::vector<InstantiatedPath> witness;
};

struct Nonterminal {
  Type goal;
  std::vector<Production> productions;
};

struct TreeGrammar {
  std::size_t start = 0;
  std::vector<Nonterminal> nonterminals;

  std::optional<std::size_t> find(const Type& goal) const;
  std::size_t add(const Type& goal);
  // Sorts each production list by combinator, arity and argument goals.
  void sort_productions();

  friend bool operator==(const TreeGrammar& a, const TreeGrammar& b);

 private:
  std::unordered_map<Type, std::size_t, TypeHash> index_;
};

// One way of discharging a goal with one combinator: the chosen arity n,
// the minimal path set P and the argument goals it induces.
struct Expansion {
  std::string combinator;
  std::size_t arity = 0;
  std::vector<InstantiatedPath> paths;
  std::vector<Type> arg_goals;
  bool variadic = false;
};

std::vector<Expansion> expand_goal(const Repository& repo, const Type& goal, const SearchConfig& cfg);

// Throws Error for goals with variables, and SubstitutionSpaceExceeded,
// NonterminalBudgetExceeded or Timeout when the search budget runs out.
TreeGrammar inhabit(const Repository& repo, const Type& goal, const SearchConfig& cfg = {});

struct CertificateNode {
  std::string combinator;
  Type goal;
  std::vector<InstantiatedPath> paths;
  std::vector<CertificateNode> children;
};

struct DerivationCertificate {
  Mode mode = Mode::Bcl0;
  CertificateNode root;

  ApplicativeTerm term() const;
};

// Derivation of `term` from the grammar start, if the grammar generates it.
std::optional<DerivationCertificate> certify(const TreeGrammar& grammar, const ApplicativeTerm& term,
                                             Mode mode);

// Re-checks every recorded choice without searching.
bool validate(const Repository& repo, const DerivationCertificate& cert, const Type& goal);

}  // namespace clsynth

#endif  // CLSYNTH_INHABITATION_HPP
