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

#include "clsynth/solutions.hpp"

#include <algorithm>
#include <functional>

#include "clsynth/errors.hpp"

namespace clsynth {

namespace {

bool all_productive(const Production& p, const std::vector<bool>& prod) {
  return std::all_of(p.args.begin(), p.args.end(), [&](std::size_t a) { return prod[a]; });
}

// Adjacency over productive nonterminals through productive productions.
std::vector<std::vector<std::size_t>> live_edges(const TreeGrammar& g, const std::vector<bool>& prod) {
  std::vector<std::vector<std::size_t>> edges(g.nonterminals.size());
  for (std::size_t i = 0; i < g.nonterminals.size(); ++i) {
    if (!prod[i]) continue;
    for (const auto& p : g.nonterminals[i].productions) {
      if (!all_productive(p, prod)) continue;
      edges[i].insert(edges[i].end(), p.args.begin(), p.args.end());
    }
    std::sort(edges[i].begin(), edges[i].end());
    edges[i].erase(std::unique(edges[i].begin(), edges[i].end()), edges[i].end());
  }
  return edges;
}

}  // namespace

std::vector<bool> productive(const TreeGrammar& g) {
  std::vector<bool> prod(g.nonterminals.size(), false);
  for (bool changed = true; changed;) {
    changed = false;
    for (std::size_t i = 0; i < g.nonterminals.size(); ++i) {
      if (prod[i]) continue;
      for (const auto& p : g.nonterminals[i].productions) {
        // A variadic production can always be used with zero arguments.
        if (p.variadic || all_productive(p, prod)) {
          prod[i] = true;
          changed = true;
          break;
        }
      }
    }
  }
  return prod;
}

bool is_empty(const TreeGrammar& g) {
  if (g.nonterminals.empty()) return true;
  return !productive(g)[g.start];
}

bool is_finite(const TreeGrammar& g) {
  if (is_empty(g)) return true;
  const auto prod = productive(g);
  const auto edges = live_edges(g, prod);
  enum Color : char { White, Grey, Black };
  std::vector<Color> color(g.nonterminals.size(), White);
  // Iterative DFS; a grey successor closes a cycle.
  std::vector<std::pair<std::size_t, std::size_t>> stack{{g.start, 0}};
  color[g.start] = Grey;
  while (!stack.empty()) {
    auto& [node, next] = stack.back();
    if (next == edges[node].size()) {
      color[node] = Black;
      stack.pop_back();
      continue;
    }
    const auto succ = edges[node][next++];
    if (color[succ] == Grey) return false;
    if (color[succ] == White) {
      color[succ] = Grey;
      stack.emplace_back(succ, 0);
    }
  }
  return true;
}

std::optional<std::size_t> max_term_size(const TreeGrammar& g) {
  if (is_empty(g) || !is_finite(g)) return std::nullopt;
  const auto prod = productive(g);
  std::vector<std::optional<std::size_t>> memo(g.nonterminals.size());
  std::function<std::size_t(std::size_t)> size_of = [&](std::size_t nt) -> std::size_t {
    if (memo[nt]) return *memo[nt];
    std::size_t best = 0;
    for (const auto& p : g.nonterminals[nt].productions) {
      if (!all_productive(p, prod)) continue;
      std::size_t s = 1;
      for (auto a : p.args) s += size_of(a);
      best = std::max(best, s);
    }
    memo[nt] = best;
    return best;
  };
  return size_of(g.start);
}

// terms[nt][s] holds the distinct terms of size s derivable from nt, sorted.
struct TermEnumerator::Table {
  // Owned copy, so an enumerator may outlive the grammar it was made from.
  TreeGrammar owned;
  const TreeGrammar* grammar;
  std::vector<std::vector<std::vector<ApplicativeTerm>>> terms;
  std::size_t filled = 0;

  // Productive nonterminals reachable from start through productive
  // productions; nothing else can contribute a term.
  std::vector<bool> live;

  explicit Table(const TreeGrammar& source)
      : owned(source), grammar(&owned), terms(owned.nonterminals.size(), {{}}) {
    const TreeGrammar& g = owned;
    live.assign(g.nonterminals.size(), false);
    if (g.nonterminals.empty()) return;
    const auto prod = productive(g);
    const auto edges = live_edges(g, prod);
    if (!prod[g.start]) return;
    std::vector<std::size_t> todo{g.start};
    live[g.start] = true;
    while (!todo.empty()) {
      const auto n = todo.back();
      todo.pop_back();
      for (auto m : edges[n]) {
        if (!live[m]) {
          live[m] = true;
          todo.push_back(m);
        }
      }
    }
  }

  const std::vector<ApplicativeTerm>& at(std::size_t nt, std::size_t size) {
    while (filled < size) fill(++filled);
    return terms[nt][size];
  }

  void fill(std::size_t size) {
    for (std::size_t nt = 0; nt < grammar->nonterminals.size(); ++nt) {
      std::vector<ApplicativeTerm> out;
      for (const auto& p : grammar->nonterminals[nt].productions) {
        if (!live[nt] || !std::all_of(p.args.begin(), p.args.end(), [&](std::size_t a) { return live[a]; })) {
          continue;
        }
        ApplicativeTerm partial{p.combinator, {}};
        if (p.variadic) {
          spread_variadic(p.args[0], size - 1, partial, out);
        } else {
          spread(p.args, 0, size - 1, partial, out);
        }
      }
      std::sort(out.begin(), out.end());
      out.erase(std::unique(out.begin(), out.end()), out.end());
      terms[nt].push_back(std::move(out));
    }
  }

  // Distributes `budget` nodes over args[i..], each argument taking at least one.
  void spread(const std::vector<std::size_t>& args, std::size_t i, std::size_t budget,
              ApplicativeTerm& partial, std::vector<ApplicativeTerm>& out) {
    if (i == args.size()) {
      if (budget == 0) out.push_back(partial);
      return;
    }
    const std::size_t rest = args.size() - i - 1;
    if (budget < rest + 1) return;
    for (std::size_t s = 1; s + rest <= budget; ++s) {
      for (const auto& t : terms[args[i]][s]) {
        partial.args.push_back(t);
        spread(args, i + 1, budget - s, partial, out);
        partial.args.pop_back();
      }
    }
  }

  void spread_variadic(std::size_t arg, std::size_t budget, ApplicativeTerm& partial,
                       std::vector<ApplicativeTerm>& out) {
    if (budget == 0) {
      out.push_back(partial);
      return;
    }
    for (std::size_t s = 1; s <= budget; ++s) {
      for (const auto& t : terms[arg][s]) {
        partial.args.push_back(t);
        spread_variadic(arg, budget - s, partial, out);
        partial.args.pop_back();
      }
    }
  }
};

TermEnumerator::TermEnumerator(const TreeGrammar& g, std::optional<std::size_t> size_bound)
    : table_(std::make_unique<Table>(g)), bound_(size_bound) {
  if (is_empty(g)) {
    bound_ = 0;
  } else if (auto m = max_term_size(g)) {
    bound_ = bound_ ? std::min(*bound_, *m) : *m;
  }
  size_ = 1;
}

TermEnumerator::~TermEnumerator() = default;
TermEnumerator::TermEnumerator(TermEnumerator&&) noexcept = default;
TermEnumerator& TermEnumerator::operator=(TermEnumerator&&) noexcept = default;

std::optional<ApplicativeTerm> TermEnumerator::next() {
  const std::size_t start = table_->grammar->start;
  while (!bound_ || size_ <= *bound_) {
    const auto& cls = table_->at(start, size_);
    if (pos_ < cls.size()) return cls[pos_++];
    ++size_;
    pos_ = 0;
  }
  return std::nullopt;
}

std::vector<ApplicativeTerm> enumerate(const TreeGrammar& g, std::size_t size_bound) {
  std::vector<ApplicativeTerm> out;
  TermEnumerator it(g, size_bound);
  while (auto t = it.next()) out.push_back(std::move(*t));
  return out;
}

std::uint64_t count_up_to(const TreeGrammar& g, std::size_t size_bound) {
  if (is_empty(g)) return 0;
  TermEnumerator it(g, size_bound);
  std::uint64_t n = 0;
  while (it.next()) ++n;
  return n;
}

bool is_unique(const TreeGrammar& g) {
  if (is_empty(g) || !is_finite(g)) return false;
  TermEnumerator it(g);
  return it.next().has_value() && !it.next().has_value();
}

TypecheckOracle::TypecheckOracle(const Repository& repo, const Type& goal, const SearchConfig& cfg)
    : repo_(repo), cfg_(cfg), atoms_(atoms_of(repo, goal)), checker_(repo.taxonomy()) {}

const std::vector<InstantiatedPath>& TypecheckOracle::paths_of(const std::string& combinator) {
  auto it = paths_.find(combinator);
  if (it != paths_.end()) return it->second;
  const auto* binding = repo_.find(combinator);
  if (!binding) throw Error("unknown combinator '" + combinator + "'");
  return paths_.emplace(combinator, instantiate(*binding, atoms_, cfg_.mode, cfg_.subst_cap)).first->second;
}

Type TypecheckOracle::derive(const ApplicativeTerm& e) {
  if (auto it = derived_.find(e); it != derived_.end()) return it->second;
  std::vector<Type> args;
  for (const auto& a : e.args) args.push_back(derive(a));
  std::vector<Type> parts;
  for (const auto& ip : paths_of(e.head)) {
    if (ip.path.length() < args.size()) continue;
    bool fits = true;
    for (std::size_t i = 0; i < args.size() && fits; ++i) fits = checker_.is_subtype(args[i], ip.path.args[i]);
    if (fits) parts.push_back(path_split(ip.path, args.size()).target);
  }
  Type t = Type::intersection(std::move(parts));
  derived_.emplace(e, t);
  return t;
}

bool TypecheckOracle::check(const ApplicativeTerm& e, const Type& goal) {
  return checker_.is_subtype(derive(e), goal);
}

bool typecheck_term(const Repository& repo, const ApplicativeTerm& e, const Type& goal,
                    const SearchConfig& cfg) {
  TypecheckOracle oracle(repo, goal, cfg);
  return oracle.check(e, goal);
}

}  // namespace clsynth
