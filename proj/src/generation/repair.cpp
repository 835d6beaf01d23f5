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

#include "generation/repair.hpp"

#include <algorithm>
#include <cctype>
#include <set>

#include "minilang/builtins.hpp"
#include "minilang/visit.hpp"

namespace mtcgen::generation {
namespace {

using namespace minilang;

constexpr int kMaxRounds = 8;

std::string Lower(std::string_view s) {
  std::string out(s);
  for (char& c : out) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return out;
}

void RenameType(TypeName& type, const std::string& from, const std::string& to) {
  if (type.kind == TypeName::Kind::kClass && type.class_name == from) type.class_name = to;
  for (auto& e : type.element) RenameType(e, from, to);
}

void RenameNode(Expr& e, const std::string& from, const std::string& to) {
  if (auto* x = e.As<Identifier>(); x && x->name == from) x->name = to;
  if (auto* x = e.As<CallExpr>(); x && x->method == from) x->method = to;
  if (auto* x = e.As<FieldAccess>(); x && x->field == from) x->field = to;
  if (auto* x = e.As<NewExpr>(); x && x->class_name == from) x->class_name = to;
}

std::set<std::string> UnresolvedSymbols(const DiagnosticList& diags) {
  std::set<std::string> out;
  for (const auto& d : diags) {
    if (d.code == DiagCode::kUnresolvedSymbol && !d.symbol.empty()) out.insert(d.symbol);
  }
  return out;
}

}  // namespace

std::vector<std::string> DeclarationMatches(const Program& program, const std::string& symbol) {
  std::string key = Lower(symbol);
  std::set<std::string> out;
  auto consider = [&](std::string_view name) {
    if (Lower(name) == key) out.insert(std::string(name));
  };
  for (const auto& cls : program.classes()) {
    consider(cls.name);
    for (const auto& f : cls.fields) consider(f.name);
    for (const auto& m : cls.methods) consider(m.name);
  }
  for (auto name : BuiltinNames()) consider(name);
  return {out.begin(), out.end()};
}

void RenameSymbol(ClassDecl& cls, const std::string& from, const std::string& to) {
  for (auto& f : cls.fields) {
    RenameType(f.type, from, to);
    if (f.init) VisitExprMut(*f.init, [&](Expr& e) { RenameNode(e, from, to); });
  }
  for (auto& m : cls.methods) {
    RenameType(m.return_type, from, to);
    for (auto& p : m.params) RenameType(p.type, from, to);
    VisitBlockMut(
        m.body,
        [&](Stmt& s) {
          if (auto* decl = s.As<VarDecl>(); decl && decl->type) RenameType(*decl->type, from, to);
        },
        [&](Expr& e) { RenameNode(e, from, to); });
  }
}

RepairResult RepairUnresolvedSymbols(const Program& program, const TestClass& test) {
  RepairResult result;
  TestClass current = test;
  std::set<std::string> given_up;
  for (int round = 0; round < kMaxRounds; ++round) {
    TestCheckResult checked = CheckTestClass(program, current);
    const auto* diags = std::get_if<DiagnosticList>(&checked);
    if (diags == nullptr) break;
    bool changed = false;
    for (const auto& symbol : UnresolvedSymbols(*diags)) {
      if (given_up.count(symbol)) continue;
      auto matches = DeclarationMatches(program, symbol);
      if (matches.size() != 1 || matches[0] == symbol) {
        given_up.insert(symbol);
        result.unrepaired.push_back(symbol);
        continue;
      }
      RenameSymbol(current.decl, symbol, matches[0]);
      result.rebinds.push_back(symbol + " -> " + matches[0]);
      changed = true;
    }
    if (!changed) break;
  }
  if (!result.rebinds.empty()) result.repaired = std::move(current);
  return result;
}

}  // namespace mtcgen::generation
