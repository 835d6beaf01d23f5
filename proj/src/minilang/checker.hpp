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

#ifndef MTCGEN_MINILANG_CHECKER_HPP_
#define MTCGEN_MINILANG_CHECKER_HPP_

#include <string>
#include <vector>

#include "minilang/ast.hpp"
#include "minilang/diagnostics.hpp"
#include "minilang/program.hpp"

namespace mtcgen::minilang {

struct ClassEntry {
  const ClassDecl* decl;
  std::string path;
};

// Resolves names and types for the classes listed in `to_check`; the other
// entries are visible but assumed already checked. Bindings are written to
// `out`.
DiagnosticList CheckClasses(const std::vector<ClassEntry>& visible,
                            const std::vector<std::size_t>& to_check, Semantics& out);

bool IsAssignable(const TypeName& to, const TypeName& from);

}  // namespace mtcgen::minilang

#endif  // MTCGEN_MINILANG_CHECKER_HPP_
