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

#include "validation/properties.hpp"

#include <map>
#include <set>
#include <string>

#include "code_model/corpus.hpp"
#include "minilang/builtins.hpp"
#include "minilang/visit.hpp"

namespace mtcgen::validation {
namespace {

using namespace minilang;

using Origins = std::set<NodeId>;

class DefUse {
 public:
  DefUse(const Program& program, const CheckedTestClass& test, const coupling::CoupledPair& pair)
      : program_(program), test_(test), pair_(pair) {}

  bool IsPairCall(const Expr& e) const {
    if (!e.As<CallExpr>()) return false;
    auto callee = code_model::CalleeOf(program_, test_.semantics, e);
    return callee && (*callee == pair_.target || *callee == pair_.candidate);
  }

  // Pair invocations a value depends on. Variables passed to a pair call are
  // tied to that call as its inputs.
  Origins Of(const Expr& root) {
    Origins out;
    VisitExpr(root, [&](const Expr& e) {
      if (const auto* id = e.As<Identifier>()) {
        auto it = vars_.find(id->name);
        if (it != vars_.end()) out.insert(it->second.begin(), it->second.end());
      } else if (IsPairCall(e)) {
        out.insert(e.meta.id);
      }
    });
    VisitExpr(root, [&](const Expr& e) {
      if (!IsPairCall(e)) return;
      const auto& call = *e.As<CallExpr>();
      for (const auto& arg : call.args) {
        VisitExpr(arg, [&](const Expr& a) {
          if (const auto* id = a.As<Identifier>()) vars_[id->name].insert(e.meta.id);
        });
      }
      if (call.receiver) {
        if (const auto* id = (*call.receiver)->As<Identifier>()) vars_[id->name].insert(e.meta.id);
      }
    });
    return out;
  }

  void Assign(const Expr& target, Origins origins, bool accumulate) {
    const Expr* base = &target;
    bool whole = true;
    while (true) {
      if (const auto* f = base->As<FieldAccess>()) {
        base = &*f->object;
      } else if (const auto* ix = base->As<IndexExpr>()) {
        base = &*ix->target;
      } else {
        break;
      }
      whole = false;
    }
    const auto* id = base->As<Identifier>();
    if (id == nullptr) return;
    Origins& slot = vars_[id->name];
    if (whole && !accumulate) slot.clear();
    slot.insert(origins.begin(), origins.end());
  }

  void Declare(const std::string& name, Origins origins) { vars_[name] = std::move(origins); }

 private:
  const Program& program_;
  const CheckedTestClass& test_;
  const coupling::CoupledPair& pair_;
  std::map<std::string, Origins> vars_;
};

bool IsAssertion(const Expr& e) {
  const auto* call = e.As<CallExpr>();
  return call != nullptr && !call->receiver && IsAssertionName(call->method);
}

bool MethodHasRelatingAssertion(const Program& program, const CheckedTestClass& test,
                                const MethodDecl& method, const coupling::CoupledPair& pair) {
  DefUse flow(program, test, pair);
  bool relating = false;
  for (const auto& s : method.body.statements) {
    if (const auto* v = s.As<VarDecl>()) {
      flow.Declare(v->name, flow.Of(v->init));
    } else if (const auto* a = s.As<AssignStmt>()) {
      Origins origins = flow.Of(a->value);
      flow.Assign(a->target, std::move(origins), a->op != AssignOp::kAssign);
    } else if (const auto* x = s.As<ExprStmt>()) {
      Origins origins = flow.Of(x->expr);
      if (IsAssertion(x->expr) && origins.size() >= 2) relating = true;
    }
  }
  return relating;
}

}  // namespace

MtcPropertyReport CheckMtcProperties(const Program& program, const CheckedTestClass& test,
                                     const coupling::CoupledPair& pair) {
  MtcPropertyReport out;
  DefUse calls(program, test, pair);
  for (const auto& m : test.decl.methods) {
    if (!m.IsTest()) continue;
    VisitBlockExprs(m.body, [&](const Expr& e) {
      if (calls.IsPairCall(e)) ++out.invocation_count;
    });
    if (MethodHasRelatingAssertion(program, test, m, pair)) out.has_relating_assertion = true;
  }
  out.is_mtc = out.invocation_count >= 2 && out.has_relating_assertion;
  return out;
}

nlohmann::json PropertiesToJson(const MtcPropertyReport& report) {
  return {{"invocationCount", report.invocation_count},
          {"hasRelatingAssertion", report.has_relating_assertion},
          {"isMtc", report.is_mtc}};
}

}  // namespace mtcgen::validation
