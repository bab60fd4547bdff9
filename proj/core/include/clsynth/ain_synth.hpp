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

#ifndef CLSYNTH_AIN_SYNTH_HPP
#define CLSYNTH_AIN_SYNTH_HPP

#include <map>
#include <memory>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "clsynth/inhabitation.hpp"
#include "clsynth/repository.hpp"
#include "clsynth/term.hpp"
#include "clsynth/types.hpp"

namespace clsynth {

struct GuifDef {
  std::string name;
  std::set<std::string> contexts;
};

struct AinRef {
  std::string name;
};

using VariantRealizer = std::variant<GuifDef, AinRef>;

struct VariantNode {
  std::string name;
  std::vector<VariantRealizer> realizers;
};

struct AlternativeNode {
  std::string name;
  std::vector<VariantNode> variants;
};

struct InteractionNode {
  std::string name;
  std::vector<AlternativeNode> alternatives;
};

struct ObjectNode {
  std::string name;
  std::vector<InteractionNode> interactions;
};

struct AinTransition {
  std::string id;
  std::string interaction;
};

struct AinDef {
  std::string name;
  std::set<std::string> places;
  // Document order; it fixes the argument order of the AIN combinator.
  std::vector<AinTransition> transitions;
  std::set<std::pair<std::string, std::string>> arcs;
};

struct GuiRepository {
  std::set<std::string> contexts;
  std::vector<ObjectNode> objects;
  std::map<std::string, AinDef> ains;
  // AINs known by name only; they cannot realize anything.
  std::set<std::string> opaque_ains;

  const AinDef* find_ain(std::string_view name) const;
  const GuifDef* find_guif(std::string_view name) const;
  std::set<std::string> interactions() const;
  // Throws ValidationError on a malformed hierarchy or net.
  void validate() const;
};

struct ResolvedNet;

struct GuifLeaf {
  std::string name;
  friend bool operator==(const GuifLeaf&, const GuifLeaf&) = default;
};

using Realization = std::variant<GuifLeaf, std::shared_ptr<const ResolvedNet>>;

struct ResolvedNet {
  AinDef base;
  std::map<std::string, Realization> realization;
};

// GUIF leaves reached from r, left to right.
std::vector<std::string> leaves(const Realization& r);

// uc applied to a level-0 type; throws ValidationError otherwise.
Type uc_normalize(const Type& inner);

struct TranslateOptions {
  // Without usage contexts every uc(...) component is left out.
  bool usage_contexts = true;
};

inline constexpr const char* kContextVariable = "alpha";

Repository translate(const GuiRepository& gr, const TranslateOptions& opts = {});

std::vector<Type> queries_for(const AinDef& ain, const std::set<std::string>& ctx,
                              const TranslateOptions& opts = {});

Realization assemble(const ApplicativeTerm& e, const GuiRepository& gr);

struct GuiSynthConfig {
  SearchConfig search;
  std::size_t size_bound = 16;
  TranslateOptions translation;
};

struct TransitionResult {
  AinTransition transition;
  Type goal;
  std::vector<ApplicativeTerm> terms;
  std::vector<Realization> realizations;

  bool realizable() const { return !terms.empty(); }
};

std::vector<TransitionResult> synthesize_gui(const GuiRepository& gr, const std::string& ain_name,
                                             const std::set<std::string>& ctx, const GuiSynthConfig& cfg = {});

GuiRepository parse_gui_repository(std::string_view src);
GuiRepository load_gui_repository(const std::string& path);

}  // namespace clsynth

#endif  // CLSYNTH_AIN_SYNTH_HPP
