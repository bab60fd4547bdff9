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

#include "clsynth/ain_synth.hpp"

#include <algorithm>

#include "clsynth/errors.hpp"
#include "clsynth/solutions.hpp"

namespace clsynth {

namespace {

template <typename F>
void for_each_variant(const GuiRepository& gr, F&& f) {
  for (const auto& o : gr.objects) {
    for (const auto& i : o.interactions) {
      for (const auto& a : i.alternatives) {
        for (const auto& v : a.variants) f(i, a, v);
      }
    }
  }
}

template <typename T>
void require_unique(const std::vector<T>& nodes, const std::string& level) {
  std::set<std::string> seen;
  for (const auto& n : nodes) {
    if (!seen.insert(n.name).second) throw ValidationError("duplicate " + level + " '" + n.name + "'");
  }
}

void validate_net(const AinDef& ain, const std::set<std::string>& interactions) {
  std::set<std::string> ids;
  for (const auto& t : ain.transitions) {
    if (!ids.insert(t.id).second) {
      throw ValidationError(ain.name + ": duplicate transition '" + t.id + "'");
    }
    if (!interactions.count(t.interaction)) {
      throw ValidationError(ain.name + ": transition '" + t.id + "' names unknown interaction '" +
                            t.interaction + "'");
    }
    if (ain.places.count(t.id)) {
      throw ValidationError(ain.name + ": '" + t.id + "' is both a place and a transition");
    }
  }
  for (const auto& [from, to] : ain.arcs) {
    const bool place_to_transition = ain.places.count(from) && ids.count(to);
    const bool transition_to_place = ids.count(from) && ain.places.count(to);
    if (!place_to_transition && !transition_to_place) {
      throw ValidationError(ain.name + ": arc " + from + " -> " + to +
                            " must connect a place and a transition of the net");
    }
  }
}

Type context_type(const std::set<std::string>& ctx) {
  std::vector<Type> atoms;
  for (const auto& c : ctx) atoms.push_back(Type::constant(c));
  return Type::intersection(std::move(atoms));
}

}  // namespace

const AinDef* GuiRepository::find_ain(std::string_view name) const {
  auto it = ains.find(std::string(name));
  return it == ains.end() ? nullptr : &it->second;
}

const GuifDef* GuiRepository::find_guif(std::string_view name) const {
  const GuifDef* found = nullptr;
  for_each_variant(*this, [&](const InteractionNode&, const AlternativeNode&, const VariantNode& v) {
    for (const auto& r : v.realizers) {
      if (const auto* g = std::get_if<GuifDef>(&r); g && g->name == name) found = g;
    }
  });
  return found;
}

std::set<std::string> GuiRepository::interactions() const {
  std::set<std::string> out;
  for (const auto& o : objects) {
    for (const auto& i : o.interactions) out.insert(i.name);
  }
  return out;
}

void GuiRepository::validate() const {
  require_unique(objects, "object");
  std::set<std::string> realizers;
  for (const auto& o : objects) {
    require_unique(o.interactions, "interaction in " + o.name);
    for (const auto& i : o.interactions) {
      require_unique(i.alternatives, "alternative in " + i.name);
      for (const auto& a : i.alternatives) require_unique(a.variants, "variant in " + a.name);
    }
  }
  for_each_variant(*this, [&](const InteractionNode&, const AlternativeNode&, const VariantNode& v) {
    for (const auto& r : v.realizers) {
      const std::string& name = std::visit([](const auto& x) -> const std::string& { return x.name; }, r);
      if (!realizers.insert(name).second) throw ValidationError("'" + name + "' realizes more than one variant");
      if (const auto* g = std::get_if<GuifDef>(&r)) {
        if (g->contexts.empty()) throw ValidationError(g->name + ": empty usage context");
        for (const auto& c : g->contexts) {
          if (!contexts.count(c)) throw ValidationError(g->name + ": unknown usage context '" + c + "'");
        }
      } else if (!ains.count(name) && !opaque_ains.count(name)) {
        throw ValidationError("dangling AIN reference '" + name + "'");
      }
    }
  });
  const auto known = interactions();
  for (const auto& [name, ain] : ains) validate_net(ain, known);
}

std::vector<std::string> leaves(const Realization& r) {
  std::vector<std::string> out;
  auto walk = [&](const auto& self, const Realization& x) -> void {
    if (const auto* g = std::get_if<GuifLeaf>(&x)) {
      out.push_back(g->name);
      return;
    }
    const auto& net = *std::get<std::shared_ptr<const ResolvedNet>>(x);
    for (const auto& t : net.base.transitions) self(self, net.realization.at(t.id));
  };
  walk(walk, r);
  return out;
}

Type uc_normalize(const Type& inner) {
  for (const auto& c : components(inner)) {
    if (c.kind() != Kind::Constant) {
      throw ValidationError("usage context must be an intersection of constants");
    }
  }
  return Type::ctor(std::string(kUsageContextCtor), {inner});
}

Repository translate(const GuiRepository& gr, const TranslateOptions& opts) {
  gr.validate();
  Repository repo;
  const Type alpha = Type::variable(kContextVariable);
  auto with_context = [&](Type base, const Type& ctx) {
    if (!opts.usage_contexts) return base;
    const Type uc = ctx.kind() == Kind::Variable ? Type::ctor(std::string(kUsageContextCtor), {ctx}) : uc_normalize(ctx);
    return Type::intersection({std::move(base), uc});
  };
  for (const auto& o : gr.objects) {
    for (const auto& i : o.interactions) {
      for (const auto& a : i.alternatives) {
        repo.add_subtype(a.name, i.name);
        for (const auto& v : a.variants) repo.add_subtype(v.name, a.name);
      }
    }
  }
  for_each_variant(gr, [&](const InteractionNode&, const AlternativeNode&, const VariantNode& v) {
    for (const auto& r : v.realizers) {
      if (const auto* g = std::get_if<GuifDef>(&r)) {
        repo.add_binding(g->name, with_context(Type::constant(v.name), context_type(g->contexts)));
        continue;
      }
      const auto* ain = gr.find_ain(std::get<AinRef>(r).name);
      if (!ain) continue;
      std::vector<Type> args;
      for (const auto& t : ain->transitions) args.push_back(with_context(Type::constant(t.interaction), alpha));
      repo.add_binding(ain->name, Type::arrows(args, with_context(Type::constant(v.name), alpha)));
    }
  });
  return repo;
}

std::vector<Type> queries_for(const AinDef& ain, const std::set<std::string>& ctx, const TranslateOptions& opts) {
  std::vector<Type> out;
  for (const auto& t : ain.transitions) {
    Type goal = Type::constant(t.interaction);
    if (opts.usage_contexts) goal = Type::intersection({goal, uc_normalize(context_type(ctx))});
    out.push_back(std::move(goal));
  }
  return out;
}

Realization assemble(const ApplicativeTerm& e, const GuiRepository& gr) {
  if (const auto* ain = gr.find_ain(e.head)) {
    if (ain->transitions.size() != e.args.size()) {
      throw ValidationError(e.head + " has " + std::to_string(ain->transitions.size()) + " transitions but " +
                            std::to_string(e.args.size()) + " arguments were given");
    }
    auto net = std::make_shared<ResolvedNet>();
    net->base = *ain;
    for (std::size_t j = 0; j < e.args.size(); ++j) {
      net->realization.emplace(ain->transitions[j].id, assemble(e.args[j], gr));
    }
    return std::shared_ptr<const ResolvedNet>(std::move(net));
  }
  if (gr.find_guif(e.head)) {
    if (!e.args.empty()) throw ValidationError("GUIF " + e.head + " takes no arguments");
    return GuifLeaf{e.head};
  }
  throw ValidationError("unknown GUIF or AIN '" + e.head + "'");
}

std::vector<TransitionResult> synthesize_gui(const GuiRepository& gr, const std::string& ain_name,
                                             const std::set<std::string>& ctx, const GuiSynthConfig& cfg) {
  const auto* ain = gr.find_ain(ain_name);
  if (!ain) {
    throw ValidationError(gr.opaque_ains.count(ain_name) ? "AIN '" + ain_name + "' has no published net"
                                                         : "unknown AIN '" + ain_name + "'");
  }
  for (const auto& c : ctx) {
    if (!gr.contexts.count(c)) throw ValidationError("unknown usage context '" + c + "'");
  }
  const Repository repo = translate(gr, cfg.translation);
  const auto goals = queries_for(*ain, ctx, cfg.translation);
  std::vector<TransitionResult> out;
  for (std::size_t j = 0; j < goals.size(); ++j) {
    TransitionResult r{ain->transitions[j], goals[j], {}, {}};
    const auto grammar = inhabit(repo, goals[j], cfg.search);
    r.terms = enumerate(grammar, cfg.size_bound);
    for (const auto& e : r.terms) r.realizations.push_back(assemble(e, gr));
    out.push_back(std::move(r));
  }
  return out;
}

}  // namespace clsynth
