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

#ifndef MTCGEN_MINILANG_PARSER_HPP_
#define MTCGEN_MINILANG_PARSER_HPP_

#include <optional>
#include <string_view>
#include <vector>

#include "minilang/ast.hpp"
#include "minilang/diagnostics.hpp"

namespace mtcgen::minilang {

// Hands out node ids. Production sources start at 1; test classes use
// kTestIdBase so that their ids never collide with the program under test.
class NodeIdAllocator {
 public:
  static constexpr NodeId kTestIdBase = NodeId{1} << 40;

  explicit NodeIdAllocator(NodeId first = 1) : next_(first) {}
  NodeId Next() { return next_++; }

 private:
  NodeId next_;
};

struct ParseResult {
  std::vector<ClassDecl> classes;
  DiagnosticList diagnostics;

  bool ok() const { return diagnostics.empty(); }
};

// Syntax-only parse of one source file. Stops at the first syntax error in
// the file and reports it as PARSE_ERROR.
ParseResult ParseSource(std::string_view path, std::string_view text, NodeIdAllocator& ids);

// Parses a single expression; used by tests and tooling.
std::optional<Expr> ParseExpression(std::string_view text, NodeIdAllocator& ids);

}  // namespace mtcgen::minilang

#endif  // MTCGEN_MINILANG_PARSER_HPP_
