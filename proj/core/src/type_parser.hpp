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

#ifndef CLSYNTH_SRC_TYPE_PARSER_HPP
#define CLSYNTH_SRC_TYPE_PARSER_HPP

#include "clsynth/types.hpp"
#include "lexer.hpp"

namespace clsynth::detail {

Type parse_type(Lexer& lex);

}  // namespace clsynth::detail

#endif  // CLSYNTH_SRC_TYPE_PARSER_HPP
