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

#ifndef MTCGEN_MINILANG_BUILTINS_HPP_
#define MTCGEN_MINILANG_BUILTINS_HPP_

#include <string_view>
#include <vector>

namespace mtcgen::minilang {

// Owner recorded for builtin callees in call sets.
inline constexpr std::string_view kBuiltinOwner = "builtin";
// Owner recorded for callees the checker could not resolve.
inline constexpr std::string_view kUnresolvedOwner = "UNRESOLVED";
// Callee name recorded for `new C()`.
inline constexpr std::string_view kConstructorName = "<init>";

enum class Builtin {
  kPrint,
  kLength,
  kCharAt,
  kIndexOf,
  kFromChars,
  kSubstring,
  kStr,
  kAppend,
  kContains,
  kEquals,
  kAssertEquals,
  kAssertNotEquals,
  kAssertTrue,
  kAssertFalse,
};

bool LookupBuiltin(std::string_view name, Builtin* out);
bool IsBuiltinName(std::string_view name);
std::vector<std::string_view> BuiltinNames();
bool IsAssertionName(std::string_view name);

}  // namespace mtcgen::minilang

#endif  // MTCGEN_MINILANG_BUILTINS_HPP_
