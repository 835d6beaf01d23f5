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

#ifndef MTCGEN_MINILANG_DIAGNOSTICS_HPP_
#define MTCGEN_MINILANG_DIAGNOSTICS_HPP_

#include <string>
#include <string_view>
#include <vector>

namespace mtcgen::minilang {

enum class DiagCode { kUnresolvedSymbol, kTypeMismatch, kParseError, kDuplicateDecl };

std::string_view DiagCodeName(DiagCode code);

struct Diagnostic {
  std::string path;
  int line = 0;
  DiagCode code = DiagCode::kParseError;
  std::string message;
  // The offending identifier for UNRESOLVED_SYMBOL / DUPLICATE_DECL.
  std::string symbol;

  // `path:line: CODE: message`
  std::string ToString() const;
};

using DiagnosticList = std::vector<Diagnostic>;

std::string FormatDiagnostics(const DiagnosticList& diags);
bool HasCode(const DiagnosticList& diags, DiagCode code);

}  // namespace mtcgen::minilang

#endif  // MTCGEN_MINILANG_DIAGNOSTICS_HPP_
