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

// Surface syntax for types:
//
//   t ::= t '->' t          right-associative, binds loosest
//       | t '&' t           intersection
//       | 'name             type variable
//       | omega
//       | Name | `any name` constant
//       | Name(t, ..., t)   constructor application
//       | (t1, ..., tn)     tuple, sugar for Prod<n>(t1, ..., tn)
//       | ()                the constant Unit
//       | (t)

#ifndef CLSYNTH_TYPE_SYNTAX_HPP
#define CLSYNTH_TYPE_SYNTAX_HPP

#include <iosfwd>
#include <string>
#include <string_view>

#include "clsynth/types.hpp"

namespace clsynth {

Type parse_type(std::string_view text);

std::string to_string(const Type& t);
std::string to_string(const Path& p);
std::string to_string(const OrganizedType& o);

// Name as written in type syntax: backtick-quoted unless it is a plain
// identifier.
std::string quote_name(std::string_view name);

std::ostream& operator<<(std::ostream& os, const Type& t);

}  // namespace clsynth

#endif  // CLSYNTH_TYPE_SYNTAX_HPP
