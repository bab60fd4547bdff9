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

#ifndef CLSYNTH_TERM_HPP
#define CLSYNTH_TERM_HPP

#include <compare>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace clsynth {

// x(e1, ..., en); a nullary head is written without parentheses.
struct ApplicativeTerm {
  std::string head;
  std::vector<ApplicativeTerm> args;

  std::size_t size() const noexcept;

  friend bool operator==(const ApplicativeTerm&, const ApplicativeTerm&) = default;
  friend std::strong_ordering operator<=>(const ApplicativeTerm& a, const ApplicativeTerm& b);
};

// Enumeration order: by node count, then structurally by head and arguments.
bool size_then_structure_less(const ApplicativeTerm& a, const ApplicativeTerm& b);

std::string to_string(const ApplicativeTerm& e);

// Reads `name(arg, ...)`; names run up to the next '(', ')', ',' or space.
ApplicativeTerm parse_term(std::string_view text);

}  // namespace clsynth

#endif  // CLSYNTH_TERM_HPP
