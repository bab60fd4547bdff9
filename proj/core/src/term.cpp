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

#include "clsynth/term.hpp"

#include <algorithm>

#include "clsynth/errors.hpp"

namespace clsynth {

std::size_t ApplicativeTerm::size() const noexcept {
  std::size_t n = 1;
  for (const auto& a : args) n += a.size();
  return n;
}

std::strong_ordering operator<=>(const ApplicativeTerm& a, const ApplicativeTerm& b) {
  if (auto c = a.head.compare(b.head) <=> 0; c != 0) return c;
  return std::lexicographical_compare_three_way(a.args.begin(), a.args.end(), b.args.begin(),
                                                b.args.end());
}

bool size_then_structure_less(const ApplicativeTerm& a, const ApplicativeTerm& b) {
  auto sa = a.size();
  auto sb = b.size();
  if (sa != sb) return sa < sb;
  return a < b;
}

namespace {

void print(std::string& out, const ApplicativeTerm& e) {
  out += e.head;
  if (e.args.empty()) return;
  out += '(';
  for (std::size_t i = 0; i < e.args.size(); ++i) {
    if (i) out += ", ";
    print(out, e.args[i]);
  }
  out += ')';
}

struct TermReader {
  std::string_view src;
  std::size_t pos = 0;

  void skip() {
    while (pos < src.size() && (src[pos] == ' ' || src[pos] == '\t' || src[pos] == '\n')) ++pos;
  }

  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, 1, pos + 1); }

  ApplicativeTerm read() {
    skip();
    ApplicativeTerm e;
    while (pos < src.size() && src[pos] != '(' && src[pos] != ')' && src[pos] != ',' &&
           src[pos] != ' ' && src[pos] != '\t' && src[pos] != '\n') {
      e.head.push_back(src[pos++]);
    }
    if (e.head.empty()) fail("expected a combinator name");
    skip();
    if (pos < src.size() && src[pos] == '(') {
      ++pos;
      do {
        e.args.push_back(read());
        skip();
      } while (pos < src.size() && src[pos] == ',' && ++pos);
      if (pos >= src.size() || src[pos] != ')') fail("expected ')'");
      ++pos;
    }
    return e;
  }
};

}  // namespace

std::string to_string(const ApplicativeTerm& e) {
  std::string out;
  print(out, e);
  return out;
}

ApplicativeTerm parse_term(std::string_view text) {
  TermReader r{text};
  auto e = r.read();
  r.skip();
  if (r.pos != text.size()) r.fail("trailing input after term");
  return e;
}

}  // namespace clsynth
