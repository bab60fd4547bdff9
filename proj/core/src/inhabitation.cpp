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

#include "clsynth/inhabitation.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <map>
#include <mutex>
#include <set>
#include <thread>
#include <unordered_map>
#include <tuple>

#include "clsynth/errors.hpp"
#include "clsynth/subtyping.hpp"
#include "clsynth/type_syntax.hpp"

namespace clsynth {

std::optional<std::size_t> TreeGrammar::find(const Type& goal) const {
  auto it = index_.find(goal);
  if (it != index_.end()) return it->second;
  // Grammars assembled without add() (e.g. read from JSON) have no index.
  if (index_.size() != nonterminals.size()) {
    for (std::size_t i = 0; i < nonterminals.size(); ++i) {
      if (nonterminals[i].goal == goal) return i;
    }
  }
  return std::nullopt;
}

std::size_t TreeGrammar::add(const Type& goal) {
  if (auto found = find(goal)) return *found;
  nonterminals.push_back(Nonterminal{goal, {}});
  index_.emplace(goal, nonterminals.size() - 1);
  return nonterminals.size() - 1;
}

void TreeGrammar::sort_productions() {
  for (auto& nt : nonterminals) {
    auto key = [this](const Production& p) {
      std::vector<Type> goals;
      for (auto a : p.args) goals.push_back(nonterminals[a].goal);
      return std::make_tuple(p.combinator, p.variadic, p.args.size(), goals);
    };
    std::stable_sort(nt.productions.begin(), nt.productions.end(),
                     [&](const Production& a, const Production& b) { return key(a) < key(b); });
  }
}

bool operator==(const TreeGrammar& a, const TreeGrammar& b) {
  if (a.start != b.start || a.nonterminals.size() != b.nonterminals.size()) return false;
  for (std::size_t i = 0; i < a.nonterminals.size(); ++i) {
    const auto& x = a.nonterminals[i];
    const auto& y = b.nonterminals[i];
    if (!(x.goal == y.goal) || x.productions.size() != y.productions.size()) return false;
    for (std::size_t j = 0; j < x.productions.size(); ++j) {
      const auto& p = x.productions[j];
      const auto& q = y.productions[j];
      if (p.combinator != q.combinator || p.args != q.args || p.variadic != q.variadic) return false;
    }
  }
  return true;
}

namespace {

class Deadline {
 public:
  explicit Deadline(std::chrono::milliseconds budget)
      : active_(budget.count() > 0), end_(std::chrono::steady_clock::now() + budget) {}

  void check(std::size_t goals) const {
    if (active_ && std::chrono::steady_clock::now() > end_) throw Timeout(goals);
  }

 private:
  bool active_;
  std::chrono::steady_clock::time_point end_;
};

// How a variable occurs in one path once the first n arguments are split
// off. "Arg" occurrences sit in the argument goals, "target" occurrences in
// the part that must be below the goal; the sign says whether enlarging the
// image strengthens (positive) or weakens (negative) that part.
struct Occurrence {
  bool arg_pos = false;
  bool arg_neg = false;
  bool tgt_pos = false;
  bool tgt_neg = false;

  bool good() const { return arg_neg || tgt_pos; }
  bool bad() const { return arg_pos || tgt_neg; }
};

void visit(const Type& t, bool positive, bool in_args, std::map<std::string, Occurrence>& occ) {
  switch (t.kind()) {
    case Kind::Variable: {
      auto& o = occ[t.name()];
      if (in_args) {
        (positive ? o.arg_pos : o.arg_neg) = true;
      } else {
        (positive ? o.tgt_pos : o.tgt_neg) = true;
      }
      return;
    }
    case Kind::Arrow:
      visit(t.source(), !positive, in_args, occ);
      visit(t.target(), positive, in_args, occ);
      return;
    default:
      for (const auto& c : t.children()) visit(c, positive, in_args, occ);
  }
}

// Variable whose image directly supplies the path leaf: a bare variable leaf
// or uc('a).
std::optional<std::string> leaf_variable(const Type& leaf) {
  if (leaf.kind() == Kind::Variable) return leaf.name();
  if (leaf.kind() == Kind::Ctor && leaf.name() == kUsageContextCtor && leaf.children().size() == 1 &&
      leaf.children()[0].kind() == Kind::Variable) {
    return leaf.children()[0].name();
  }
  return std::nullopt;
}

// All subsets of base (ascending mask order), optionally only those meeting
// `wanted`.
std::vector<Level0Image> subsets(const std::vector<std::string>& base, const std::set<std::string>* wanted,
                                 std::uint64_t cap) {
  if (base.size() >= 63 || (std::uint64_t{1} << base.size()) > cap) throw SubstitutionSpaceExceeded(cap);
  std::vector<Level0Image> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << base.size()); ++mask) {
    Level0Image img;
    bool meets = wanted == nullptr;
    for (std::size_t i = 0; i < base.size(); ++i) {
      if (!(mask & (std::uint64_t{1} << i))) continue;
      img.atoms.push_back(base[i]);
      meets = meets || wanted->count(base[i]);
    }
    if (meets) out.push_back(std::move(img));
  }
  return out;
}

// True when some variable of t sits below an arrow. Instances of a path
// without such variables are closed under intersection: the instance for
// the union of two substitutions is equivalent to the intersection of the
// two instances.
bool variable_under_arrow(const Type& t) {
  if (t.kind() == Kind::Arrow) return !is_ground(t);
  for (const auto& c : t.children()) {
    if (variable_under_arrow(c)) return true;
  }
  return false;
}

// One instance of a binding path, split after n arguments.
struct Element {
  std::size_t base = 0;
  bool distributive = false;
  std::vector<Type> args;
  std::vector<Path> targets;
  Type target;
  Substitution substitution;
  std::vector<InstantiatedPath> witness;
};

// Instances that passed the relevance filter, by base path and substitution.
using InstanceIndex = std::map<std::pair<std::size_t, Substitution>, std::size_t>;

// Paths sharing their first arguments are merged under one arrow.
Type rebuild(const std::vector<Path>& paths, std::size_t depth) {
  std::vector<Type> parts;
  std::map<Type, std::vector<Path>> by_arg;
  for (const auto& p : paths) {
    if (p.length() == depth) {
      parts.push_back(p.leaf);
    } else {
      by_arg[p.args[depth]].push_back(p);
    }
  }
  for (const auto& [arg, group] : by_arg) parts.push_back(Type::arrow(arg, rebuild(group, depth + 1)));
  return Type::intersection(std::move(parts));
}

struct BindingInfo {
  const CombinatorBinding* binding = nullptr;
  std::vector<Path> paths;
  std::vector<bool> distributive;
  std::set<std::string> vars;
  std::size_t max_length = 0;
};

class Engine {
 public:
  Engine(const Repository& repo, const SearchConfig& cfg, std::set<std::string> atoms)
      : repo_(repo), cfg_(cfg), atoms_(std::move(atoms)), checker_(repo.taxonomy()), deadline_(cfg.timeout) {
    bool polymorphic = false;
    for (const auto& b : repo.bindings()) {
      BindingInfo info;
      info.binding = &b;
      info.paths = organize(b.type).paths;
      collect_variables(b.type, info.vars);
      for (const auto& p : info.paths) {
        info.max_length = std::max(info.max_length, p.length());
        bool under = variable_under_arrow(p.leaf);
        for (const auto& a : p.args) under = under || variable_under_arrow(a);
        info.distributive.push_back(!under);
      }
      polymorphic = polymorphic || !info.vars.empty();
      bindings_.push_back(std::move(info));
    }
    if (cfg.mode == Mode::Bcl0 && polymorphic) {
      if (atoms_.size() >= 63 || (std::uint64_t{1} << atoms_.size()) > cfg.subst_cap) {
        throw SubstitutionSpaceExceeded(cfg.subst_cap);
      }
    }
  }

  void set_progress(const std::atomic<std::size_t>* goals) { goals_ = goals; }
  void check_deadline() const { deadline_.check(progress()); }
  std::size_t budget() const noexcept { return cfg_.max_nonterminals; }

  std::vector<Expansion> expand(const Type& goal) const;

  // Normal form for argument goals: the paths of t minus those implied by
  // another path, rebuilt with common argument prefixes shared, as in
  // (a -> b) & (a -> c) ==> a -> b & c.
  Type reduce(const Type& t) const {
    const auto paths = organize(t).paths;
    std::vector<Type> as_types;
    for (const auto& p : paths) as_types.push_back(p.to_type());
    std::vector<Path> kept;
    for (std::size_t i = 0; i < paths.size(); ++i) {
      bool drop = false;
      for (std::size_t j = 0; j < paths.size() && !drop; ++j) {
        if (i == j || !checker_.is_subtype(as_types[j], as_types[i])) continue;
        drop = j < i || !checker_.is_subtype(as_types[i], as_types[j]);
      }
      if (!drop) kept.push_back(paths[i]);
    }
    return rebuild(kept, 0);
  }

 private:
  std::size_t progress() const { return goals_ ? goals_->load() : 0; }

  bool leaf_relevant(const Type& leaf, const Type& goal_leaf) const {
    if (goal_leaf.kind() == Kind::Ctor) {
      return leaf.kind() == Kind::Ctor && leaf.name() == goal_leaf.name() &&
             leaf.children().size() == goal_leaf.children().size();
    }
    return leaf.is_atom() && atom_leq(repo_.taxonomy(), leaf, goal_leaf);
  }

  bool relevant(const Path& target, const Path& goal) const {
    if (target.length() != goal.length() || !leaf_relevant(target.leaf, goal.leaf)) return false;
    for (std::size_t i = 0; i < goal.length(); ++i) {
      if (!checker_.is_subtype(goal.args[i], target.args[i])) return false;
    }
    return true;
  }

  bool relevant(const Element& e, const Path& goal) const {
    return std::any_of(e.targets.begin(), e.targets.end(), [&](const Path& t) { return relevant(t, goal); });
  }

  // Atoms a for which the leaf with its variable mapped to {a} can match a
  // goal leaf of the given length.
  std::set<std::string> leaf_atoms(const Type& leaf, std::size_t length,
                                   const std::vector<Path>& goal, const std::vector<std::string>& rel) const {
    std::set<std::string> out;
    for (const auto& a : rel) {
      const Type image = Type::constant(a);
      for (const auto& g : goal) {
        if (g.length() != length) continue;
        bool match = false;
        if (leaf.kind() == Kind::Variable) {
          match = atom_leq(repo_.taxonomy(), image, g.leaf);
        } else if (g.leaf.kind() == Kind::Ctor && g.leaf.name() == leaf.name() && g.leaf.children().size() == 1) {
          match = checker_.is_subtype(image, g.leaf.children()[0]);
        }
        if (match) {
          out.insert(a);
          break;
        }
      }
    }
    return out;
  }

  std::vector<Element> candidates(std::size_t binding, std::size_t n, const std::vector<Path>& goal,
                                  const std::vector<std::string>& rel, InstanceIndex& index) const;

  void drop_dominated(std::vector<Element>& elems) const;

  std::set<std::vector<std::size_t>> minimal_sets(const std::vector<Element>& elems,
                                                  const std::vector<Path>& goal,
                                                  const std::vector<Element>& all,
                                                  const InstanceIndex& index) const;

  const Repository& repo_;
  const SearchConfig& cfg_;
  std::set<std::string> atoms_;
  std::vector<BindingInfo> bindings_;
  SubtypeChecker checker_;
  Deadline deadline_;
  const std::atomic<std::size_t>* goals_ = nullptr;
};

std::vector<Element> Engine::candidates(std::size_t binding, std::size_t n, const std::vector<Path>& goal,
                                        const std::vector<std::string>& rel, InstanceIndex& index) const {
  const auto& info = bindings_[binding];
  std::set<std::size_t> goal_lengths;
  for (const auto& g : goal) goal_lengths.insert(g.length());

  std::vector<Element> out;
  std::set<std::tuple<std::size_t, std::vector<Type>, std::vector<Path>>> seen;
  auto consider = [&](std::size_t base, const Type& instance, const Substitution& s) {
    const auto paths = organize(instance).paths;
    if (paths.empty()) return;
    Element e;
    e.base = base;
    e.distributive = info.distributive[base];
    e.args = path_split(paths.front(), n).args;
    std::vector<Type> parts;
    for (const auto& p : paths) {
      e.targets.push_back(Path{{p.args.begin() + static_cast<std::ptrdiff_t>(n), p.args.end()}, p.leaf});
      parts.push_back(e.targets.back().to_type());
      e.witness.push_back(InstantiatedPath{p, s});
    }
    e.target = Type::intersection(std::move(parts));
    e.substitution = s;
    if (!std::any_of(goal.begin(), goal.end(), [&](const Path& g) { return relevant(e, g); })) return;
    if (!seen.emplace(base, e.args, e.targets).second) {
      for (std::size_t k = 0; k < out.size(); ++k) {
        if (out[k].base == base && out[k].args == e.args && out[k].targets == e.targets) {
          index.emplace(std::make_pair(base, s), k);
          break;
        }
      }
      return;
    }
    index.emplace(std::make_pair(base, s), out.size());
    out.push_back(std::move(e));
  };

  const bool substitute = cfg_.mode == Mode::Bcl0 && !info.vars.empty();
  Substitution unused;
  if (substitute) {
    for (const auto& v : info.vars) unused.emplace(v, Level0Image{});
  }
  const std::vector<std::string> all_atoms(atoms_.begin(), atoms_.end());

  for (std::size_t b = 0; b < info.paths.size(); ++b) {
    const auto& base = info.paths[b];
    if (base.length() < n || !goal_lengths.count(base.length() - n)) continue;
    deadline_.check(progress());
    std::set<std::string> path_vars;
    collect_variables(base.to_type(), path_vars);
    if (!substitute || path_vars.empty()) {
      consider(b, base.to_type(), unused);
      continue;
    }

    std::map<std::string, Occurrence> occ;
    for (std::size_t i = 0; i < base.length(); ++i) visit(base.args[i], i < n, i < n, occ);
    const auto leaf_var = leaf_variable(base.leaf);
    if (!leaf_var) visit(base.leaf, true, false, occ);
    std::set<std::string> wanted;
    if (leaf_var) {
      wanted = leaf_atoms(base.leaf, base.length() - n, goal, rel);
      if (wanted.empty()) continue;
    }

    std::vector<std::string> vars(path_vars.begin(), path_vars.end());
    std::vector<std::vector<Level0Image>> domains;
    std::uint64_t total = 1;
    for (const auto& v : vars) {
      const Occurrence o = occ[v];
      const bool at_leaf = leaf_var && *leaf_var == v;
      std::vector<Level0Image> dom;
      if (o.good() && o.bad()) {
        dom = subsets(o.arg_neg ? all_atoms : rel, at_leaf ? &wanted : nullptr, cfg_.subst_cap);
      } else if (o.good()) {
        // Enlarging the image only helps, so the largest useful one suffices.
        dom.push_back(Level0Image{o.arg_neg ? all_atoms : rel});
      } else if (at_leaf) {
        const std::vector<std::string> leaf_base(wanted.begin(), wanted.end());
        dom = subsets(leaf_base, &wanted, cfg_.subst_cap);
      } else {
        // Enlarging never helps: omega dominates.
        dom.push_back(Level0Image{});
      }
      if (dom.empty()) {
        total = 0;
        break;
      }
      if (total > cfg_.subst_cap / dom.size()) throw SubstitutionSpaceExceeded(cfg_.subst_cap, progress());
      total *= dom.size();
      domains.push_back(std::move(dom));
    }
    if (total == 0) continue;

    std::vector<std::size_t> digits(vars.size(), 0);
    const Type base_type = base.to_type();
    for (std::uint64_t k = 0; k < total; ++k) {
      if ((k & 0xff) == 0) deadline_.check(progress());
      Substitution s = unused;
      for (std::size_t i = 0; i < vars.size(); ++i) s[vars[i]] = domains[i][digits[i]];
      consider(b, apply_substitution(s, base_type), s);
      for (std::size_t i = 0; i < digits.size(); ++i) {
        if (++digits[i] < domains[i].size()) break;
        digits[i] = 0;
      }
    }
  }
  return out;
}

void Engine::drop_dominated(std::vector<Element>& elems) const {
  // f dominates e when its target is stronger and its arguments weaker;
  // replacing e by f in any valid set stays valid and relaxes the argument
  // goals.
  auto dominates = [&](const Element& f, const Element& e) {
    if (!checker_.is_subtype(f.target, e.target)) return false;
    for (std::size_t i = 0; i < e.args.size(); ++i) {
      if (!checker_.is_subtype(e.args[i], f.args[i])) return false;
    }
    return true;
  };
  std::vector<bool> keep(elems.size(), true);
  for (std::size_t i = 0; i < elems.size(); ++i) {
    if ((i & 0x3f) == 0) deadline_.check(progress());
    for (std::size_t j = 0; j < elems.size() && keep[i]; ++j) {
      if (i == j || !dominates(elems[j], elems[i])) continue;
      keep[i] = !(j < i || !dominates(elems[i], elems[j]));
    }
  }
  std::vector<Element> kept;
  for (std::size_t i = 0; i < elems.size(); ++i) {
    if (keep[i]) kept.push_back(std::move(elems[i]));
  }
  elems = std::move(kept);
}

std::set<std::vector<std::size_t>> Engine::minimal_sets(const std::vector<Element>& elems,
                                                        const std::vector<Path>& goal,
                                                        const std::vector<Element>& all,
                                                        const InstanceIndex& index) const {
  std::vector<std::vector<std::size_t>> relevant_to(goal.size());
  for (std::size_t g = 0; g < goal.size(); ++g) {
    for (std::size_t e = 0; e < elems.size(); ++e) {
      if (relevant(elems[e], goal[g])) relevant_to[g].push_back(e);
    }
  }
  auto first_uncovered = [&](const std::vector<std::size_t>& set) -> std::optional<std::size_t> {
    OrganizedType o;
    for (auto e : set) o.paths.insert(o.paths.end(), elems[e].targets.begin(), elems[e].targets.end());
    std::sort(o.paths.begin(), o.paths.end());
    o.paths.erase(std::unique(o.paths.begin(), o.paths.end()), o.paths.end());
    for (std::size_t g = 0; g < goal.size(); ++g) {
      if (!checker_.covers(o, goal[g])) return g;
    }
    return std::nullopt;
  };
  // Two instances of one path are redundant together when the instance for
  // the union of their substitutions is a candidate with a target at least
  // as strong and arguments at least as weak. For a distributive path that
  // always holds.
  auto joined_away = [&](const Element& a, const Element& b) {
    if (a.distributive) return true;
    Substitution s = a.substitution;
    for (const auto& [v, img] : b.substitution) {
      auto& mine = s[v];
      std::vector<std::string> atoms;
      std::set_union(mine.atoms.begin(), mine.atoms.end(), img.atoms.begin(), img.atoms.end(),
                     std::back_inserter(atoms));
      mine.atoms = std::move(atoms);
    }
    auto it = index.find({a.base, s});
    if (it == index.end()) return false;
    const Element& j = all[it->second];
    if (!checker_.is_subtype(j.target, Type::intersection({a.target, b.target}))) return false;
    for (std::size_t i = 0; i < j.args.size(); ++i) {
      if (!checker_.is_subtype(Type::intersection({a.args[i], b.args[i]}), j.args[i])) return false;
    }
    return true;
  };
  auto base_taken = [&](const std::vector<std::size_t>& set, const Element& c) {
    return std::any_of(set.begin(), set.end(),
                       [&](std::size_t e) { return elems[e].base == c.base && joined_away(elems[e], c); });
  };

  std::set<std::vector<std::size_t>> visited;
  std::set<std::vector<std::size_t>> result;
  std::vector<std::vector<std::size_t>> stack{{}};
  while (!stack.empty()) {
    auto set = std::move(stack.back());
    stack.pop_back();
    if (!visited.insert(set).second) continue;
    deadline_.check(progress());
    auto missing = first_uncovered(set);
    if (!missing) {
      bool minimal = true;
      for (std::size_t i = 0; i < set.size() && minimal; ++i) {
        auto smaller = set;
        smaller.erase(smaller.begin() + static_cast<std::ptrdiff_t>(i));
        minimal = first_uncovered(smaller).has_value();
      }
      if (minimal) result.insert(set);
      continue;
    }
    for (auto it = relevant_to[*missing].rbegin(); it != relevant_to[*missing].rend(); ++it) {
      if (std::binary_search(set.begin(), set.end(), *it) || base_taken(set, elems[*it])) continue;
      auto bigger = set;
      bigger.insert(std::upper_bound(bigger.begin(), bigger.end(), *it), *it);
      stack.push_back(std::move(bigger));
    }
  }
  return result;
}

std::vector<Expansion> Engine::expand(const Type& goal) const {
  std::vector<Expansion> out;
  const auto organized_goal = organize(goal);
  if (organized_goal.is_omega()) {
    for (const auto& info : bindings_) {
      Expansion e;
      e.combinator = info.binding->name;
      e.arg_goals = {Type::omega()};
      e.variadic = true;
      out.push_back(std::move(e));
    }
    return out;
  }
  const auto& goal_paths = organized_goal.paths;

  std::set<std::string> goal_constants;
  collect_constants(goal, goal_constants);
  std::vector<std::string> rel;
  for (const auto& a : atoms_) {
    for (const auto& b : goal_constants) {
      if (repo_.taxonomy().leq(a, b)) {
        rel.push_back(a);
        break;
      }
    }
  }

  std::set<std::pair<std::string, std::vector<Type>>> emitted;
  for (std::size_t b = 0; b < bindings_.size(); ++b) {
    const auto& info = bindings_[b];
    for (std::size_t n = 0; n <= info.max_length; ++n) {
      InstanceIndex index;
      auto elems = candidates(b, n, goal_paths, rel, index);
      if (elems.empty()) continue;
      const auto all = elems;
      drop_dominated(elems);
      for (const auto& set : minimal_sets(elems, goal_paths, all, index)) {
        deadline_.check(progress());
        Expansion e;
        e.combinator = info.binding->name;
        e.arity = n;
        for (std::size_t i = 0; i < n; ++i) {
          std::vector<Type> parts;
          for (auto k : set) parts.push_back(elems[k].args[i]);
          e.arg_goals.push_back(reduce(Type::intersection(std::move(parts))));
        }
        if (!emitted.emplace(e.combinator, e.arg_goals).second) continue;
        for (auto k : set) e.paths.insert(e.paths.end(), elems[k].witness.begin(), elems[k].witness.end());
        out.push_back(std::move(e));
      }
    }
  }
  return out;
}

// Over-approximation used to prune the grammar: a goal can only be
// inhabited if each of its paths is, so single paths are solved on their own
// first, with every argument goal split into its paths. The path space is
// much smaller than the space of intersections it prunes.
class PathAbstraction {
 public:
  explicit PathAbstraction(const Engine& engine) : engine_(engine) {}

  bool viable(const Type& goal) {
    for (const auto& p : organize(goal).paths) {
      if (!productive(p.to_type())) return false;
    }
    return true;
  }

 private:
  struct Node {
    Type type;
    std::vector<std::vector<std::size_t>> productions;
    bool productive = false;
  };

  std::size_t node(const Type& t, std::vector<std::size_t>& fresh) {
    auto [it, inserted] = index_.emplace(t, nodes_.size());
    if (inserted) {
      nodes_.push_back(Node{t, {}, false});
      fresh.push_back(it->second);
    }
    return it->second;
  }

  bool productive(const Type& path) {
    if (auto it = index_.find(path); it != index_.end()) return nodes_[it->second].productive;
    std::vector<std::size_t> fresh;
    node(path, fresh);
    while (!fresh.empty()) {
      const auto n = fresh.back();
      fresh.pop_back();
      const Type goal = nodes_[n].type;
      engine_.check_deadline();
      if (nodes_.size() > engine_.budget()) throw NonterminalBudgetExceeded(engine_.budget(), nodes_.size());
      for (const auto& e : engine_.expand(goal)) {
        std::vector<std::size_t> needs;
        if (!e.variadic) {
          for (const auto& arg : e.arg_goals) {
            for (const auto& q : organize(arg).paths) needs.push_back(node(q.to_type(), fresh));
          }
        }
        nodes_[n].productions.push_back(std::move(needs));
      }
    }
    // The explored part is closed under expansion, so its fixed point is final.
    for (bool changed = true; changed;) {
      changed = false;
      for (auto& nd : nodes_) {
        if (nd.productive) continue;
        for (const auto& needs : nd.productions) {
          if (std::all_of(needs.begin(), needs.end(), [&](std::size_t k) { return nodes_[k].productive; })) {
            nd.productive = true;
            changed = true;
            break;
          }
        }
      }
    }
    return nodes_[index_.at(path)].productive;
  }

  const Engine& engine_;
  std::vector<Node> nodes_;
  std::unordered_map<Type, std::size_t, TypeHash> index_;
};

void require_ground(const Type& goal) {
  if (!is_ground(goal)) throw Error("goal contains type variables: " + to_string(goal));
}

}  // namespace

std::vector<Expansion> expand_goal(const Repository& repo, const Type& goal, const SearchConfig& cfg) {
  require_ground(goal);
  Engine engine(repo, cfg, atoms_of(repo, goal));
  return engine.expand(goal);
}

TreeGrammar inhabit(const Repository& repo, const Type& goal, const SearchConfig& cfg) {
  require_ground(goal);
  Engine engine(repo, cfg, atoms_of(repo, goal));
  std::atomic<std::size_t> goals{1};
  engine.set_progress(&goals);

  TreeGrammar grammar;
  grammar.start = grammar.add(goal);
  std::vector<std::size_t> frontier{grammar.start};
  PathAbstraction abstraction(engine);
  const unsigned jobs = std::max(1u, cfg.parallelism);

  while (!frontier.empty()) {
    std::vector<std::vector<Expansion>> results(frontier.size());
    std::vector<Type> goals_now;
    for (auto idx : frontier) goals_now.push_back(grammar.nonterminals[idx].goal);

    const unsigned workers = std::min<unsigned>(jobs, static_cast<unsigned>(frontier.size()));
    if (workers <= 1) {
      for (std::size_t i = 0; i < frontier.size(); ++i) results[i] = engine.expand(goals_now[i]);
    } else {
      std::atomic<std::size_t> next{0};
      std::exception_ptr failure;
      std::mutex failure_mutex;
      std::vector<std::thread> pool;
      for (unsigned w = 0; w < workers; ++w) {
        pool.emplace_back([&] {
          for (std::size_t i = next++; i < frontier.size(); i = next++) {
            try {
              results[i] = engine.expand(goals_now[i]);
            } catch (...) {
              std::lock_guard lock(failure_mutex);
              if (!failure) failure = std::current_exception();
              next = frontier.size();
            }
          }
        });
      }
      for (auto& t : pool) t.join();
      if (failure) std::rethrow_exception(failure);
    }

    // Merge in frontier order so the grammar does not depend on scheduling.
    std::vector<std::size_t> upcoming;
    for (std::size_t i = 0; i < frontier.size(); ++i) {
      for (auto& e : results[i]) {
        if (!std::all_of(e.arg_goals.begin(), e.arg_goals.end(),
                         [&](const Type& t) { return abstraction.viable(t); })) {
          continue;
        }
        Production prod;
        prod.combinator = std::move(e.combinator);
        prod.variadic = e.variadic;
        prod.witness = std::move(e.paths);
        for (const auto& arg : e.arg_goals) {
          const auto before = grammar.nonterminals.size();
          const auto idx = grammar.add(arg);
          if (grammar.nonterminals.size() != before) {
            if (grammar.nonterminals.size() > cfg.max_nonterminals) {
              throw NonterminalBudgetExceeded(cfg.max_nonterminals, grammar.nonterminals.size());
            }
            upcoming.push_back(idx);
            goals = grammar.nonterminals.size();
          }
          prod.args.push_back(idx);
        }
        grammar.nonterminals[frontier[i]].productions.push_back(std::move(prod));
      }
    }
    frontier = std::move(upcoming);
  }
  grammar.sort_productions();
  return grammar;
}

ApplicativeTerm DerivationCertificate::term() const {
  auto build = [](const auto& self, const CertificateNode& node) -> ApplicativeTerm {
    ApplicativeTerm e{node.combinator, {}};
    for (const auto& c : node.children) e.args.push_back(self(self, c));
    return e;
  };
  return build(build, root);
}

namespace {

std::optional<CertificateNode> derive(const TreeGrammar& g, std::size_t nt, const ApplicativeTerm& e) {
  const auto& nonterminal = g.nonterminals[nt];
  for (const auto& prod : nonterminal.productions) {
    if (prod.combinator != e.head) continue;
    if (!prod.variadic && prod.args.size() != e.args.size()) continue;
    CertificateNode node{prod.combinator, nonterminal.goal, prod.witness, {}};
    bool ok = true;
    for (std::size_t i = 0; i < e.args.size() && ok; ++i) {
      auto child = derive(g, prod.variadic ? prod.args[0] : prod.args[i], e.args[i]);
      if (child) {
        node.children.push_back(std::move(*child));
      } else {
        ok = false;
      }
    }
    if (ok) return node;
  }
  return std::nullopt;
}

bool image_within(const Substitution& s, const std::set<std::string>& vars,
                  const std::set<std::string>& atoms) {
  for (const auto& [v, img] : s) {
    if (!vars.count(v)) return false;
    for (const auto& a : img.atoms) {
      if (!atoms.count(a)) return false;
    }
  }
  return true;
}

bool validate_node(const Repository& repo, const SubtypeChecker& checker, Mode mode,
                   const std::set<std::string>& atoms, const CertificateNode& node, const Type& goal) {
  const auto* binding = repo.find(node.combinator);
  if (!binding) return false;
  const std::size_t n = node.children.size();
  std::set<std::string> vars;
  collect_variables(binding->type, vars);

  std::vector<Type> targets;
  std::vector<std::vector<Type>> args(n);
  for (const auto& ip : node.paths) {
    if (mode == Mode::Fcl && !ip.substitution.empty()) return false;
    if (!image_within(ip.substitution, vars, atoms)) return false;
    const auto inst = organize(apply_substitution(ip.substitution, binding->type));
    if (!std::binary_search(inst.paths.begin(), inst.paths.end(), ip.path)) return false;
    if (ip.path.length() < n) return false;
    auto split = path_split(ip.path, n);
    targets.push_back(split.target);
    for (std::size_t i = 0; i < n; ++i) args[i].push_back(split.args[i]);
  }
  if (!checker.is_subtype(Type::intersection(targets), goal)) return false;
  for (std::size_t i = 0; i < n; ++i) {
    const Type expected = Type::intersection(args[i]);
    if (!checker.equiv(node.children[i].goal, expected)) return false;
    if (!validate_node(repo, checker, mode, atoms, node.children[i], node.children[i].goal)) return false;
  }
  return true;
}

}  // namespace

std::optional<DerivationCertificate> certify(const TreeGrammar& grammar, const ApplicativeTerm& term,
                                             Mode mode) {
  if (grammar.nonterminals.empty()) return std::nullopt;
  auto root = derive(grammar, grammar.start, term);
  if (!root) return std::nullopt;
  return DerivationCertificate{mode, std::move(*root)};
}

bool validate(const Repository& repo, const DerivationCertificate& cert, const Type& goal) {
  SubtypeChecker checker(repo.taxonomy());
  return validate_node(repo, checker, cert.mode, atoms_of(repo, goal), cert.root, goal);
}

}  // namespace clsynth
