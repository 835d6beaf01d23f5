// Copyright 2026 The mtcgen Authors
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

#ifndef MTCGEN_GENERATION_REPAIR_HPP_
#define MTCGEN_GENERATION_REPAIR_HPP_

#include <optional>
#include <string>
#include <vector>

#include "minilang/program.hpp"

namespace mtcgen::generation {

struct RepairResult {
  // Set when at least one symbol was rebound.
  std::optional<minilang::TestClass> repaired;
  // "old -> New" for every rebinding, in application order.
  std::vector<std::string> rebinds;
  // Unresolved symbols with zero or several case-insensitive matches.
  std::vector<std::string> unrepaired;
};

// Case-insensitive matches of `symbol` among the program's class, method and
// field names and the builtins; one entry per distinct spelling.
std::vector<std::string> DeclarationMatches(const minilang::Program& program,
                                            const std::string& symbol);

// Renames every use of `from` (identifiers, callee names, field names, class
// names in `new` and in types) to `to`.
void RenameSymbol(minilang::ClassDecl& cls, const std::string& from, const std::string& to);

// Rebinds each unresolved symbol that has exactly one case-insensitive match
// in the program, re-checking after every round until nothing changes.
RepairResult RepairUnresolvedSymbols(const minilang::Program& program,
                                     const minilang::TestClass& test);

}  // namespace mtcgen::generation

#endif  // MTCGEN_GENERATION_REPAIR_HPP_
