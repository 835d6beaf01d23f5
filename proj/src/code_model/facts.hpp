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

#ifndef MTCGEN_CODE_MODEL_FACTS_HPP_
#define MTCGEN_CODE_MODEL_FACTS_HPP_

#include <set>
#include <string>
#include <vector>

#include "json.hpp"
#include "minilang/program.hpp"

namespace mtcgen::code_model {

struct FieldRef {
  std::string class_name;
  std::string field;

  std::string ToString() const { return class_name + "." + field; }
  auto operator<=>(const FieldRef&) const = default;
};

// Static facts of one method, taken from its own body only.
struct MethodFacts {
  minilang::MethodRef method;
  std::set<std::string> name_tokens;
  // Parameter and return types; void is never included.
  std::set<minilang::TypeName> para_ret_types;
  // Resolved callees. Builtins use owner "builtin" and constructors the name
  // "<init>"; calls the checker could not bind use owner "UNRESOLVED".
  std::set<minilang::MethodRef> calls;
  std::set<FieldRef> read_fields;
  std::set<FieldRef> write_fields;

  bool operator==(const MethodFacts&) const = default;
};

struct FactsOptions {
  std::set<std::string> stoplist;  // empty: DefaultStoplist()
};

// Throws Error(kUnknownMethod) when `method` is not declared in `program`.
MethodFacts ExtractFacts(const minilang::Program& program, const minilang::MethodRef& method,
                         const FactsOptions& options = {});

// Facts for every method of `class_name`, in declaration order.
std::vector<MethodFacts> ExtractClassFacts(const minilang::Program& program,
                                           const std::string& class_name,
                                           const FactsOptions& options = {});

nlohmann::json FactsToJson(const MethodFacts& facts);

}  // namespace mtcgen::code_model

#endif  // MTCGEN_CODE_MODEL_FACTS_HPP_
