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

// Repository (the type environment of combinator bindings), its textual
// form, and level-0 substitutions.

#ifndef CLSYNTH_REPOSITORY_HPP
#define CLSYNTH_REPOSITORY_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "clsynth/subtyping.hpp"
#include "clsynth/types.hpp"

namespace clsynth {

enum class Mode { Fcl, Bcl0 };

std::string to_string(Mode m);
Mode parse_mode(std::string_view text);

struct CombinatorBinding {
  std::string name;
  Type type;

  friend bool operator==(const CombinatorBinding&, const CombinatorBinding&) = default;
};

class Repository {
 public:
  Repository() = default;

  // Throws ValidationError on a duplicate name or a constructor arity that
  // conflicts with an earlier use.
  void add_binding(std::string name, Type type);
  void add_subtype(const std::string& sub, const std::string& super);

  const std::vector<CombinatorBinding>& bindings() const noexcept { return bindings_; }
  const Taxonomy& taxonomy() const noexcept { return taxonomy_; }
  const std::map<std::string, std::size_t>& ctor_signatures() const noexcept { return ctor_arities_; }

  const CombinatorBinding* find(std::string_view name) const;
  bool empty() const noexcept { return bindings_.empty(); }

  // Checks t against the recorded constructor arities without recording it.
  void check_arities(const Type& t) const;

  friend bool operator==(const Repository& a, const Repository& b) {
    return a.bindings_ == b.bindings_ && a.taxonomy_ == b.taxonomy_;
  }

 private:
  void record_arities(const Type& t, std::map<std::string, std::size_t>& into) const;

  std::vector<CombinatorBinding> bindings_;
  std::map<std::string, std::size_t> index_;
  Taxonomy taxonomy_;
  std::map<std::string, std::size_t> ctor_arities_;
};

// `comb name : type;`, `subtype A <= B;`, `#` line comments.
Repository parse_repository(std::string_view source);
Repository load_repository(const std::string& path);
std::string render_repository(const Repository& repo);

// Constants occurring in any binding or in the goal; omega and constants that
// only appear in the taxonomy are excluded.
std::set<std::string> atoms_of(const Repository& repo, const Type& goal);

// An intersection of constants; the empty set is omega.
struct Level0Image {
  std::vector<std::string> atoms;  // sorted, unique

  Type to_type() const;
  friend bool operator==(const Level0Image&, const Level0Image&) = default;
  friend auto operator<=>(const Level0Image&, const Level0Image&) = default;
};

// The 2^|atoms| level-0 images over a fixed atom set, produced on demand in
// binary-counting order (omega first).
class Level0Images {
 public:
  // Throws SubstitutionSpaceExceeded if 2^|atoms| > cap.
  Level0Images(const std::set<std::string>& atoms, std::uint64_t cap);

  std::uint64_t size() const noexcept { return std::uint64_t{1} << atoms_.size(); }
  Level0Image operator[](std::uint64_t mask) const;

 private:
  std::vector<std::string> atoms_;
};

Level0Images level0_images(const std::set<std::string>& atoms, std::uint64_t cap);

using Substitution = std::map<std::string, Level0Image>;

std::string to_string(const Substitution& s);

// Homomorphic extension; unmapped variables stay as they are.
Type apply_substitution(const Substitution& s, const Type& t);

struct InstantiatedPath {
  Path path;
  Substitution substitution;

  friend bool operator==(const InstantiatedPath&, const InstantiatedPath&) = default;
};

// Paths of the intersection of S(type) over all substitutions S of the
// binding's variables into level-0 images over `atoms` (identity only in fcl
// mode). Each path is paired with the first substitution producing it.
// Throws SubstitutionSpaceExceeded when the number of substitutions exceeds
// the cap.
std::vector<InstantiatedPath> instantiate(const CombinatorBinding& binding,
                                          const std::set<std::string>& atoms, Mode mode,
                                          std::uint64_t cap);

}  // namespace clsynth

#endif  // CLSYNTH_REPOSITORY_HPP
