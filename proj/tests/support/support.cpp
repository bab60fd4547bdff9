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

#include "support.hpp"

namespace clsynth::testing {
namespace {

std::size_t pick(std::mt19937& rng, std::size_t n) {
  return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng);
}

Type random_atom(std::mt19937& rng, const TypeShape& shape) {
  const std::size_t n = shape.constants.size() + shape.variables.size() + (shape.allow_omega ? 1 : 0);
  std::size_t k = pick(rng, n);
  if (k < shape.constants.size()) return Type::constant(shape.constants[k]);
  k -= shape.constants.size();
  if (k < shape.variables.size()) return Type::variable(shape.variables[k]);
  return Type::omega();
}

}  // namespace

Type random_type(std::mt19937& rng, const TypeShape& shape, std::size_t depth) {
  if (depth == 0 || pick(rng, 3) == 0) return random_atom(rng, shape);
  const std::size_t kinds = shape.unary_ctors.empty() ? 2 : 3;
  switch (pick(rng, kinds)) {
    case 0: return Type::arrow(random_type(rng, shape, depth - 1), random_type(rng, shape, depth - 1));
    case 1: return Type::intersection({random_type(rng, shape, depth - 1), random_type(rng, shape, depth - 1)});
    default:
      return Type::ctor(shape.unary_ctors[pick(rng, shape.unary_ctors.size())],
                        {random_type(rng, shape, depth - 1)});
  }
}

Repository random_repository(std::mt19937& rng, const RepoShape& shape) {
  Repository repo;
  const std::size_t n = 1 + pick(rng, shape.max_bindings);
  for (std::size_t i = 0; i < n; ++i)
    repo.add_binding("x" + std::to_string(i), random_type(rng, shape.types));
  const auto& cs = shape.types.constants;
  if (cs.size() >= 2) {
    const std::size_t edges = pick(rng, shape.max_edges + 1);
    for (std::size_t i = 0; i < edges; ++i) {
      std::size_t a = pick(rng, cs.size()), b = pick(rng, cs.size());
      if (a != b) repo.add_subtype(cs[a], cs[b]);
    }
  }
  return repo;
}

std::string data_file(const std::string& name) { return std::string(CLSYNTH_DATA_DIR) + "/" + name; }

}  // namespace clsynth::testing
