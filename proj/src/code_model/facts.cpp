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

#include "code_model/facts.hpp"

#include "code_model/tokenizer.hpp"
#include "common/error.hpp"
#include "minilang/builtins.hpp"
#include "minilang/visit.hpp"

namespace mtcgen::code_model {
namespace {

using namespace minilang;

class FactCollector {
 public:
  FactCollector(const Program& program, MethodFacts& facts) : program_(program), facts_(facts) {}

  void Block(const minilang::Block& block) {
    VisitBlock(
        block,
        [&](const Stmt& s) {
          if (const auto* assign = s.As<AssignStmt>()) Assignment(*assign);
        },
        [](const Expr&) {});
    for (const auto& s : block.statements) Statement(s);
  }

 private:
  void Statement(const Stmt& s) {
    if (const auto* x = s.As<VarDecl>()) {
      Read(x->init);
    } else if (const auto* x = s.As<AssignStmt>()) {
      Read(x->value);
    } else if (const auto* x = s.As<IfStmt>()) {
      Read(x->condition);
      for (const auto& n : x->then_block.statements) Statement(n);
      if (x->else_block) {
        for (const auto& n : x->else_block->statements) Statement(n);
      }
    } else if (const auto* x = s.As<WhileStmt>()) {
      Read(x->condition);
      for (const auto& n : x->body.statements) Statement(n);
    } else if (const auto* x = s.As<ReturnStmt>()) {
      if (x->value) Read(*x->value);
    } else if (const auto* x = s.As<ExprStmt>()) {
      Read(x->expr);
    } else if (const auto* x = s.As<ThrowStmt>()) {
      Read(x->value);
    }
  }

  std::optional<FieldRef> FieldOf(const Expr& e) const {
    const Semantics& sem = program_.semantics();
    if (const auto* id = e.As<Identifier>()) {
      auto it = sem.idents.find(e.meta.id);
      if (it == sem.idents.end() || it->second.kind == IdentBinding::Kind::kLocal) {
        return std::nullopt;
      }
      return FieldRef{it->second.owner, id->name};
    }
    if (const auto* fa = e.As<FieldAccess>()) {
      auto it = sem.fields.find(e.meta.id);
      if (it == sem.fields.end()) return std::nullopt;
      return FieldRef{it->second.owner, fa->field};
    }
    return std::nullopt;
  }

  void Read(const Expr& root) {
    VisitExpr(root, [&](const Expr& e) {
      if (auto field = FieldOf(e)) facts_.read_fields.insert(*field);
      if (const auto* call = e.As<CallExpr>()) facts_.calls.insert(Callee(e, *call));
      if (const auto* n = e.As<NewExpr>()) {
        facts_.calls.insert(MethodRef{n->class_name, std::string(kConstructorName), {}});
      }
    });
  }

  void Assignment(const AssignStmt& s) {
    const Expr& target = s.target;
    bool compound = s.op != AssignOp::kAssign;
    if (auto field = FieldOf(target)) {
      facts_.write_fields.insert(*field);
      if (compound) facts_.read_fields.insert(*field);
      if (const auto* fa = target.As<FieldAccess>()) Read(*fa->object);
      return;
    }
    if (const auto* ix = target.As<IndexExpr>()) {
      // Storing into a list element held by a field mutates that field's
      // state; the list itself is also loaded.
      if (auto field = FieldOf(*ix->target)) facts_.write_fields.insert(*field);
    }
    Read(target);
  }

  MethodRef Callee(const Expr& e, const CallExpr& call) const {
    auto it = program_.semantics().calls.find(e.meta.id);
    if (it == program_.semantics().calls.end()) {
      return MethodRef{std::string(kUnresolvedOwner), call.method, {}};
    }
    const CallBinding& binding = it->second;
    if (binding.kind == CallBinding::Kind::kBuiltin) {
      return MethodRef{std::string(kBuiltinOwner), call.method, {}};
    }
    const ClassDecl* owner = program_.FindClass(binding.owner);
    if (owner == nullptr || binding.method_index >= owner->methods.size()) {
      return MethodRef{std::string(kUnresolvedOwner), call.method, {}};
    }
    return RefOf(*owner, owner->methods[binding.method_index]);
  }

  const Program& program_;
  MethodFacts& facts_;
};

}  // namespace

MethodFacts ExtractFacts(const Program& program, const MethodRef& method,
                         const FactsOptions& options) {
  const MethodDecl* decl = program.FindMethod(method);
  if (decl == nullptr) {
    throw Error(ErrorCode::kUnknownMethod, "unknown method " + method.ToString());
  }
  MethodFacts facts;
  facts.method = method;
  facts.name_tokens = options.stoplist.empty() ? NameTokens(decl->name)
                                               : NameTokens(decl->name, options.stoplist);
  for (const auto& p : decl->params) facts.para_ret_types.insert(p.type);
  if (!decl->return_type.IsVoid()) facts.para_ret_types.insert(decl->return_type);
  FactCollector collector(program, facts);
  collector.Block(decl->body);
  return facts;
}

std::vector<MethodFacts> ExtractClassFacts(const Program& program, const std::string& class_name,
                                           const FactsOptions& options) {
  const ClassDecl* cls = program.FindClass(class_name);
  if (cls == nullptr) throw Error(ErrorCode::kUnknownMethod, "unknown class " + class_name);
  std::vector<MethodFacts> out;
  for (const auto& m : cls->methods) out.push_back(ExtractFacts(program, RefOf(*cls, m), options));
  return out;
}

nlohmann::json FactsToJson(const MethodFacts& facts) {
  nlohmann::json j;
  j["method"] = facts.method.ToString();
  j["nameTokens"] = facts.name_tokens;
  auto& types = j["paraRetTypes"] = nlohmann::json::array();
  for (const auto& t : facts.para_ret_types) types.push_back(t.ToString());
  auto& calls = j["calls"] = nlohmann::json::array();
  for (const auto& c : facts.calls) calls.push_back(c.ToString());
  auto& reads = j["readFields"] = nlohmann::json::array();
  for (const auto& f : facts.read_fields) reads.push_back(f.ToString());
  auto& writes = j["writeFields"] = nlohmann::json::array();
  for (const auto& f : facts.write_fields) writes.push_back(f.ToString());
  return j;
}

}  // namespace mtcgen::code_model
