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

// DOT and JSON renderings of grammars, terms and assembled nets.

#ifndef CLSYNTH_EMIT_HPP
#define CLSYNTH_EMIT_HPP

#include <string>
#include <string_view>

#include "clsynth/ain_synth.hpp"
#include "clsynth/inhabitation.hpp"
#include "clsynth/term.hpp"

namespace clsynth {

// Goals are ellipses, productions boxes; edges closing a cycle are dashed.
std::string grammar_to_dot(const TreeGrammar& g);
// Places are circles, transitions boxes; nested nets become clusters.
std::string net_to_dot(const Realization& r);

// {"start": i, "nonterminals": [{"type": "...", "productions":
//   [{"comb": "...", "args": [j, ...], "variadic": bool}]}]}
// Witness paths are not serialized.
std::string grammar_to_json(const TreeGrammar& g, int indent = 2);
TreeGrammar grammar_from_json(std::string_view text);

std::string term_to_json(const ApplicativeTerm& e, int indent = -1);
ApplicativeTerm term_from_json(std::string_view text);

std::string net_to_json(const Realization& r, int indent = 2);

}  // namespace clsynth

#endif  // CLSYNTH_EMIT_HPP
