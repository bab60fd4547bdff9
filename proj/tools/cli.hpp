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

#ifndef CLSYNTH_TOOLS_CLI_HPP
#define CLSYNTH_TOOLS_CLI_HPP

#include <chrono>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

namespace clsynth::cli {

// Runs one command line (without the program name). Returns 0 for a
// nonempty result, 1 for a decided-empty one and 2 on errors.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

// "500ms", "2s", "1m" or a bare number of seconds.
std::chrono::milliseconds parse_duration(std::string_view text);

}  // namespace clsynth::cli

#endif  // CLSYNTH_TOOLS_CLI_HPP
