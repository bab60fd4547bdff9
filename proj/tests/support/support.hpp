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

// Random generators and fixtures shared by the test binaries.
#ifndef CLSYNTH_TESTS_SUPPORT_HPP
#define CLSYNTH_TESTS_SUPPORT_HPP

#include <cstddef>
#include <random>
#include <string>
#include <vector>

#include "clsynth/repository.hpp"
#include "clsynth/types.hpp"

namespace clsynth::testing {

struct TypeShape {
  std::vector<std::string> constants = {"a", "b", "c"};
  std::vector<std::string> variables;
  std::vector<std::string> unary_ctors;
  std::size_t max_depth = 3;
  bool allow_omega = true;
};

Type random_type(std::mt19937& rng, const TypeShape& shape, std::size_t depth);
inline Type random_type(std::mt19937& rng, const TypeShape& shape) {
  return random_type(rng, shape, shape.max_depth);
}

struct RepoShape {
  TypeShape types;
  std::size_t max_bindings = 5;
  std::size_t max_edges = 1;
};

Repository random_repository(std::mt19937& rng, const RepoShape& shape);

std::string data_file(const std::string& name);

}  // namespace clsynth::testing

#endif  // CLSYNTH_TESTS_SUPPORT_HPP
