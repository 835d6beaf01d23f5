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

// Canonical source layout: 4-space indent, one statement per line, braces
// always present, `} else {` on one line. A binary operand that is itself a
// binary expression is always parenthesized, so swapping one operator changes
// exactly one token of the output.

#ifndef MTCGEN_MINILANG_PRINTER_HPP_
#define MTCGEN_MINILANG_PRINTER_HPP_

#include <string>
#include <vector>

#include "minilang/ast.hpp"
#include "minilang/program.hpp"

namespace mtcgen::minilang {

std::string PrintExpr(const Expr& expr);
std::string PrintStmt(const Stmt& stmt, int indent = 0);
std::string PrintMethod(const MethodDecl& method, int indent = 0);
std::string PrintClass(const ClassDecl& cls);
// Classes separated by one blank line.
std::string PrintClasses(const std::vector<ClassDecl>& classes);
std::string PrettyPrint(const Program& program);

// Method signature without body, e.g. `static int add(int a, int b);`.
std::string PrintSignature(const MethodDecl& method);

}  // namespace mtcgen::minilang

#endif  // MTCGEN_MINILANG_PRINTER_HPP_
