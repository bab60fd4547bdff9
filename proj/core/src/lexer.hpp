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

// Tokenizer shared by the type, repository and GUI-repository readers.

#ifndef CLSYNTH_SRC_LEXER_HPP
#define CLSYNTH_SRC_LEXER_HPP

#include <cstddef>
#include <string>
#include <string_view>

#include "clsynth/errors.hpp"

namespace clsynth::detail {

enum class Tok {
  Ident,     // plain or `quoted` name
  Variable,  // 'name
  LParen,
  RParen,
  LBrace,
  RBrace,
  LBracket,
  RBracket,
  Comma,
  Amp,
  Arrow,
  Colon,
  Semi,
  Leq,
  End,
};

struct Token {
  Tok kind = Tok::End;
  std::string text;
  bool quoted = false;
  std::size_t line = 1;
  std::size_t column = 1;
};

class Lexer {
 public:
  // With names_with_amp, '&' is an identifier character (GUI repository names
  // such as ViewIngr&Prep.ain) instead of the intersection operator.
  explicit Lexer(std::string_view src, bool names_with_amp = false)
      : src_(src), names_with_amp_(names_with_amp) {
    advance();
  }

  const Token& peek() const noexcept { return current_; }

  Token next() {
    Token t = current_;
    advance();
    return t;
  }

  bool accept(Tok kind) {
    if (current_.kind != kind) return false;
    advance();
    return true;
  }

  Token expect(Tok kind, std::string_view what) {
    if (current_.kind != kind) fail("expected " + std::string(what) + describe());
    return next();
  }

  bool at_keyword(std::string_view word) const {
    return current_.kind == Tok::Ident && !current_.quoted && current_.text == word;
  }

  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError(msg, current_.line, current_.column);
  }

  std::string describe() const {
    if (current_.kind == Tok::End) return ", found end of input";
    return ", found '" + current_.text + "'";
  }

 private:
  static bool ident_start(char c) {
    return (c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z') || c == '_';
  }
  bool ident_char(char c) const {
    return ident_start(c) || (c >= '0' && c <= '9') || c == '.' || (names_with_amp_ && c == '&');
  }

  char at(std::size_t i) const { return i < src_.size() ? src_[i] : '\0'; }

  void bump() {
    if (src_[pos_] == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    ++pos_;
  }

  void skip_space() {
    while (pos_ < src_.size()) {
      char c = src_[pos_];
      if (c == '#') {
        while (pos_ < src_.size() && src_[pos_] != '\n') bump();
      } else if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
        bump();
      } else {
        break;
      }
    }
  }

  void advance() {
    skip_space();
    current_ = Token{};
    current_.line = line_;
    current_.column = col_;
    if (pos_ >= src_.size()) {
      current_.kind = Tok::End;
      return;
    }
    char c = src_[pos_];
    auto single = [&](Tok k) {
      current_.kind = k;
      current_.text = std::string(1, c);
      bump();
    };
    switch (c) {
      case '(': return single(Tok::LParen);
      case ')': return single(Tok::RParen);
      case '{': return single(Tok::LBrace);
      case '}': return single(Tok::RBrace);
      case '[': return single(Tok::LBracket);
      case ']': return single(Tok::RBracket);
      case ',': return single(Tok::Comma);
      case ':': return single(Tok::Colon);
      case ';': return single(Tok::Semi);
      default: break;
    }
    if (c == '&' && !names_with_amp_) return single(Tok::Amp);
    if (c == '-' && at(pos_ + 1) == '>') {
      current_.kind = Tok::Arrow;
      current_.text = "->";
      bump();
      bump();
      return;
    }
    if (c == '<' && at(pos_ + 1) == '=') {
      current_.kind = Tok::Leq;
      current_.text = "<=";
      bump();
      bump();
      return;
    }
    if (c == '`') {
      bump();
      std::string name;
      while (pos_ < src_.size() && src_[pos_] != '`' && src_[pos_] != '\n') {
        name.push_back(src_[pos_]);
        bump();
      }
      if (at(pos_) != '`') throw ParseError("unterminated quoted name", current_.line, current_.column);
      bump();
      if (name.empty()) throw ParseError("empty quoted name", current_.line, current_.column);
      current_.kind = Tok::Ident;
      current_.text = std::move(name);
      current_.quoted = true;
      return;
    }
    if (c == '\'') {
      bump();
      std::string name;
      while (pos_ < src_.size() && ident_char(src_[pos_])) {
        name.push_back(src_[pos_]);
        bump();
      }
      if (name.empty()) throw ParseError("expected variable name after '", current_.line, current_.column);
      current_.kind = Tok::Variable;
      current_.text = std::move(name);
      return;
    }
    if (ident_start(c) || (names_with_amp_ && (c == '&' || (c >= '0' && c <= '9')))) {
      std::string name;
      while (pos_ < src_.size() && ident_char(src_[pos_])) {
        name.push_back(src_[pos_]);
        bump();
      }
      current_.kind = Tok::Ident;
      current_.text = std::move(name);
      return;
    }
    throw ParseError(std::string("unexpected character '") + c + "'", line_, col_);
  }

  std::string_view src_;
  bool names_with_amp_;
  std::size_t pos_ = 0;
  std::size_t line_ = 1;
  std::size_t col_ = 1;
  Token current_;
};

}  // namespace clsynth::detail

#endif  // CLSYNTH_SRC_LEXER_HPP
