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

#include "minilang/diagnostics.hpp"

#include <algorithm>

namespace mtcgen::minilang {

std::string_view DiagCodeName(DiagCode code) {
  switch (code) {
    case DiagCode::kUnresolvedSymbol:
      return "UNRESOLVED_SYMBOL";
    case DiagCode::kTypeMismatch:
      return "TYPE_MISMATCH";
    case DiagCode::kParseError:
      return "PARSE_ERROR";
    case DiagCode::kDuplicateDecl:
      return "DUPLICATE_DECL";
  }
  return "PARSE_ERROR";
}

std::string Diagnostic::ToString() const {
  return path + ":" + std::to_string(line) + ": " + std::string(DiagCodeName(code)) + ": " +
         message;
}

std::string FormatDiagnostics(const DiagnosticList& diags) {
  std::string out;
  for (const auto& d : diags) {
    out += d.ToString();
    out += '\n';
  }
  return out;
}

bool HasCode(const DiagnosticList& diags, DiagCode code) {
  return std::any_of(diags.begin(), diags.end(),
                     [code](const Diagnostic& d) { return d.code == code; });
}

}  // namespace mtcgen::minilang
