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

#include "minilang/builtins.hpp"

#include <array>
#include <utility>

namespace mtcgen::minilang {
namespace {

constexpr std::array<std::pair<std::string_view, Builtin>, 14> kBuiltins = {{
    {"print", Builtin::kPrint},
    {"length", Builtin::kLength},
    {"charAt", Builtin::kCharAt},
    {"indexOf", Builtin::kIndexOf},
    {"fromChars", Builtin::kFromChars},
    {"substring", Builtin::kSubstring},
    {"str", Builtin::kStr},
    {"append", Builtin::kAppend},
    {"contains", Builtin::kContains},
    {"equals", Builtin::kEquals},
    {"assertEquals", Builtin::kAssertEquals},
    {"assertNotEquals", Builtin::kAssertNotEquals},
    {"assertTrue", Builtin::kAssertTrue},
    {"assertFalse", Builtin::kAssertFalse},
}};

}  // namespace

bool LookupBuiltin(std::string_view name, Builtin* out) {
  for (const auto& [spelling, builtin] : kBuiltins) {
    if (spelling == name) {
      if (out != nullptr) *out = builtin;
      return true;
    }
  }
  return false;
}

bool IsBuiltinName(std::string_view name) { return LookupBuiltin(name, nullptr); }

std::vector<std::string_view> BuiltinNames() {
  std::vector<std::string_view> out;
  for (const auto& entry : kBuiltins) out.push_back(entry.first);
  return out;
}

bool IsAssertionName(std::string_view name) {
  return name == "assertEquals" || name == "assertNotEquals" || name == "assertTrue" ||
         name == "assertFalse";
}

}  // namespace mtcgen::minilang
