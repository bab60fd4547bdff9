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

// Reader for the GUI repository format (.gar).
//
//   contexts p, s, e, i;
//   object Meal {
//     interaction ShowClock {
//       alternative ShowClock_A1 {
//         variant ShowClock_V1 {
//           guif LargeClock.guif ctx{s, e, i};
//           ain DateTime.ain;
//         }
//       }
//     }
//   }
//   ain DateTime.ain;                 # declared, body unpublished
//   ain ViewMeal.ain {
//     transitions: [t1: ShowRecipe, t2: ShowClock];
//     places: [start, mid, end];
//     arcs: [start -> t1, t1 -> mid, mid -> t2, t2 -> end];
//   }

#include <fstream>
#include <sstream>

#include "clsynth/ain_synth.hpp"
#include "clsynth/errors.hpp"
#include "lexer.hpp"

namespace clsynth {

namespace {

using detail::Lexer;
using detail::Tok;

class GuiParser {
 public:
  explicit GuiParser(std::string_view src) : lex_(src, /*names_with_amp=*/true) {}

  GuiRepository parse() {
    while (lex_.peek().kind != Tok::End) {
      if (lex_.at_keyword("contexts")) {
        lex_.next();
        for (auto& c : name_list(Tok::Semi)) gr_.contexts.insert(std::move(c));
        lex_.expect(Tok::Semi, "';'");
      } else if (lex_.at_keyword("object")) {
        lex_.next();
        gr_.objects.push_back(object());
      } else if (lex_.at_keyword("ain")) {
        lex_.next();
        ain();
      } else {
        lex_.fail("expected 'contexts', 'object' or 'ain'" + lex_.describe());
      }
    }
    gr_.validate();
    return std::move(gr_);
  }

 private:
  std::string name(std::string_view what) { return lex_.expect(Tok::Ident, what).text; }

  std::vector<std::string> name_list(Tok close) {
    std::vector<std::string> out;
    if (lex_.peek().kind == close) return out;
    do {
      out.push_back(name("a name"));
    } while (lex_.accept(Tok::Comma));
    return out;
  }

  void keyword(std::string_view word) {
    if (!lex_.at_keyword(word)) lex_.fail("expected '" + std::string(word) + "'" + lex_.describe());
    lex_.next();
  }

  ObjectNode object() {
    ObjectNode o{name("object name"), {}};
    lex_.expect(Tok::LBrace, "'{'");
    while (!lex_.accept(Tok::RBrace)) {
      keyword("interaction");
      InteractionNode i{name("interaction name"), {}};
      lex_.expect(Tok::LBrace, "'{'");
      while (!lex_.accept(Tok::RBrace)) {
        keyword("alternative");
        AlternativeNode a{name("alternative name"), {}};
        lex_.expect(Tok::LBrace, "'{'");
        while (!lex_.accept(Tok::RBrace)) {
          keyword("variant");
          a.variants.push_back(variant());
        }
        i.alternatives.push_back(std::move(a));
      }
      o.interactions.push_back(std::move(i));
    }
    return o;
  }

  VariantNode variant() {
    VariantNode v{name("variant name"), {}};
    lex_.expect(Tok::LBrace, "'{'");
    while (!lex_.accept(Tok::RBrace)) {
      if (lex_.at_keyword("guif")) {
        lex_.next();
        GuifDef g{name("GUIF name"), {}};
        keyword("ctx");
        lex_.expect(Tok::LBrace, "'{'");
        const auto line = lex_.peek().line;
        const auto column = lex_.peek().column;
        for (auto& c : name_list(Tok::RBrace)) g.contexts.insert(std::move(c));
        if (g.contexts.empty()) throw ParseError(g.name + ": empty usage context", line, column);
        lex_.expect(Tok::RBrace, "'}'");
        lex_.expect(Tok::Semi, "';'");
        v.realizers.emplace_back(std::move(g));
      } else if (lex_.at_keyword("ain")) {
        lex_.next();
        v.realizers.emplace_back(AinRef{name("AIN name")});
        lex_.expect(Tok::Semi, "';'");
      } else {
        lex_.fail("expected 'guif' or 'ain'" + lex_.describe());
      }
    }
    return v;
  }

  void ain() {
    const auto at = lex_.peek();
    const std::string n = name("AIN name");
    if (gr_.ains.count(n) || gr_.opaque_ains.count(n)) throw ParseError("AIN '" + n + "' declared twice", at.line, at.column);
    if (lex_.accept(Tok::Semi)) {
      gr_.opaque_ains.insert(n);
      return;
    }
    AinDef def;
    def.name = n;
    lex_.expect(Tok::LBrace, "'{' or ';'");
    while (!lex_.accept(Tok::RBrace)) {
      if (lex_.at_keyword("transitions")) {
        section();
        if (lex_.peek().kind != Tok::RBracket) {
          do {
            AinTransition t;
            t.id = name("transition id");
            lex_.expect(Tok::Colon, "':'");
            t.interaction = name("interaction name");
            def.transitions.push_back(std::move(t));
          } while (lex_.accept(Tok::Comma));
        }
      } else if (lex_.at_keyword("places")) {
        section();
        for (auto& p : name_list(Tok::RBracket)) def.places.insert(std::move(p));
      } else if (lex_.at_keyword("arcs")) {
        section();
        if (lex_.peek().kind != Tok::RBracket) {
          do {
            std::string from = name("arc source");
            lex_.expect(Tok::Arrow, "'->'");
            def.arcs.emplace(std::move(from), name("arc target"));
          } while (lex_.accept(Tok::Comma));
        }
      } else {
        lex_.fail("expected 'transitions', 'places' or 'arcs'" + lex_.describe());
      }
      lex_.expect(Tok::RBracket, "']'");
      lex_.expect(Tok::Semi, "';'");
    }
    gr_.ains.emplace(n, std::move(def));
  }

  void section() {
    lex_.next();
    lex_.expect(Tok::Colon, "':'");
    lex_.expect(Tok::LBracket, "'['");
  }

  Lexer lex_;
  GuiRepository gr_;
};

}  // namespace

GuiRepository parse_gui_repository(std::string_view src) { return GuiParser(src).parse(); }

GuiRepository load_gui_repository(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_gui_repository(buf.str());
}

}  // namespace clsynth
