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

#ifndef CLSYNTH_ERRORS_HPP
#define CLSYNTH_ERRORS_HPP

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace clsynth {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Syntax or validation failure in one of the textual input formats.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t line, std::size_t column)
      : Error(std::to_string(line) + ":" + std::to_string(column) + ": " + what),
        line_(line),
        column_(column) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

// Well-formed input that violates a repository invariant (duplicate names,
// constructor arity conflicts, dangling references).
class ValidationError : public Error {
 public:
  using Error::Error;
};

class SubstitutionSpaceExceeded : public Error {
 public:
  SubstitutionSpaceExceeded(std::uint64_t cap, std::size_t goals_reached = 0)
      : Error("substitution space exceeds the configured cap of " + std::to_string(cap) +
              " (goals reached: " + std::to_string(goals_reached) + ")"),
        cap_(cap),
        goals_reached_(goals_reached) {}

  std::uint64_t cap() const noexcept { return cap_; }
  std::size_t goals_reached() const noexcept { return goals_reached_; }

 private:
  std::uint64_t cap_;
  std::size_t goals_reached_;
};

class NonterminalBudgetExceeded : public Error {
 public:
  NonterminalBudgetExceeded(std::size_t budget, std::size_t goals_reached)
      : Error("nonterminal budget of " + std::to_string(budget) + " exceeded (goals reached: " +
              std::to_string(goals_reached) + ")"),
        goals_reached_(goals_reached) {}

  std::size_t goals_reached() const noexcept { return goals_reached_; }

 private:
  std::size_t goals_reached_;
};

class Timeout : public Error {
 public:
  explicit Timeout(std::size_t goals_reached)
      : Error("inhabitation timed out (goals reached: " + std::to_string(goals_reached) + ")"),
        goals_reached_(goals_reached) {}

  std::size_t goals_reached() const noexcept { return goals_reached_; }

 private:
  std::size_t goals_reached_;
};

}  // namespace clsynth

#endif  // CLSYNTH_ERRORS_HPP
