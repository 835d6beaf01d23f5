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

#include "minilang/ast.hpp"

#include <algorithm>

namespace mtcgen::minilang {

std::string TypeName::ToString() const {
  switch (kind) {
    case Kind::kInt:
      return "int";
    case Kind::kBool:
      return "bool";
    case Kind::kString:
      return "string";
    case Kind::kList:
      return "list<" + element.front().ToString() + ">";
    case Kind::kClass:
      return class_name;
    case Kind::kVoid:
      return "void";
    case Kind::kNull:
      return "null";
    case Kind::kEmptyList:
      return "list<?>";
  }
  return "?";
}

bool operator<(const TypeName& a, const TypeName& b) { return a.ToString() < b.ToString(); }

const char* BinaryOpSpelling(BinaryOp op) {
  switch (op) {
    case BinaryOp::kAdd: return "+";
    case BinaryOp::kSub: return "-";
    case BinaryOp::kMul: return "*";
    case BinaryOp::kDiv: return "/";
    case BinaryOp::kMod: return "%";
    case BinaryOp::kEq: return "==";
    case BinaryOp::kNe: return "!=";
    case BinaryOp::kLt: return "<";
    case BinaryOp::kLe: return "<=";
    case BinaryOp::kGt: return ">";
    case BinaryOp::kGe: return ">=";
    case BinaryOp::kAnd: return "&&";
    case BinaryOp::kOr: return "||";
  }
  return "?";
}

const char* UnaryOpSpelling(UnaryOp op) { return op == UnaryOp::kNot ? "!" : "-"; }

const char* AssignOpSpelling(AssignOp op) {
  switch (op) {
    case AssignOp::kAssign: return "=";
    case AssignOp::kAddAssign: return "+=";
    case AssignOp::kSubAssign: return "-=";
    case AssignOp::kMulAssign: return "*=";
  }
  return "=";
}

bool MethodDecl::HasAnnotation(const std::string& annotation) const {
  return std::find(annotations.begin(), annotations.end(), annotation) != annotations.end();
}

std::vector<TypeName> MethodDecl::ParamTypes() const {
  std::vector<TypeName> types;
  types.reserve(params.size());
  for (const auto& p : params) types.push_back(p.type);
  return types;
}

const FieldDecl* ClassDecl::FindField(const std::string& field) const {
  for (const auto& f : fields) {
    if (f.name == field) return &f;
  }
  return nullptr;
}

}  // namespace mtcgen::minilang
